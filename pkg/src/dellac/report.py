"""Verification report record shared by every check and by the CLI."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one verification check."""

    check: str
    n: int
    expected: object
    actual: object
    passed: bool
    elapsed_ms: int = 0
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms if timing else 0,
            "witnesses": list(self.witnesses),
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def _jsonable(value):
    # JSON numbers lose precision past 2^53 in many readers; huge ints become strings
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) < 2**53 else str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


class timed:
    """Context manager measuring wall time in whole milliseconds."""

    def __enter__(self):
        self._start = time.perf_counter()
        self.ms = 0
        return self

    def __exit__(self, *exc):
        self.ms = int(round((time.perf_counter() - self._start) * 1000))
        return False
