"""Partial tableaux, T-paths and the bijections pi_j they induce.

Row indices in this module are logical names.  "Upper" and "lower" dots of
a column compare physical positions, see :func:`dellac.core.rho`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Protocol, Sequence

from .core import Tableau, rho
from .errors import (
    BoxOccupied,
    ColumnCountViolation,
    DiagonalViolation,
    InternalInconsistency,
    NonTermination,
    PreconditionViolated,
    ShapeViolation,
    TargetNotInCodomain,
)


class RowGrid(Protocol):
    n: int

    def col_of(self, i: int) -> int: ...

    def column_rows(self, j: int) -> tuple[int, ...]: ...


@dataclass(frozen=True)
class PartialTableau:
    """A j-tableau: columns ``1..j-1`` hold two dots, logical rows ``1..j-1`` one.

    ``phys_col[p - 1]`` is 0 when physical row ``p`` is empty.
    """

    n: int
    j: int
    phys_col: tuple[int, ...]

    def __post_init__(self):
        n, j = self.n, self.j
        pc = tuple(int(c) for c in self.phys_col)
        object.__setattr__(self, "phys_col", pc)
        if n < 1 or len(pc) != 2 * n or not 1 <= j <= n + 1:
            raise ShapeViolation(f"bad partial tableau shape n={n}, j={j}, len={len(pc)}")
        counts = [0] * (n + 1)
        for p, c in enumerate(pc, start=1):
            if c:
                if not 1 <= c <= n:
                    raise ShapeViolation(f"row {p} holds column {c}", index=p)
                if c > p:
                    raise DiagonalViolation(f"dot ({c},{p}) lies below the diagonal", index=p)
                counts[c] += 1
        for c in range(1, n + 1):
            if counts[c] > 2 or (c < j and counts[c] != 2) or (c > j and counts[c]):
                raise ColumnCountViolation(f"column {c} holds {counts[c]} dots", index=c)
        for i in range(1, j):
            if not pc[rho(n, i) - 1]:
                raise ShapeViolation(f"logical row {i} is empty at stage {j}", index=i)

    @classmethod
    def empty(cls, n: int) -> "PartialTableau":
        return cls(n, 1, (0,) * (2 * n))

    @classmethod
    def from_tableau(cls, T: Tableau, j: int | None = None) -> "PartialTableau":
        """View a complete tableau as a j-tableau (default: keep all columns)."""
        if j is None:
            return cls(T.n, T.n + 1, T.phys_col)
        return cls(T.n, j, tuple(c if c < j else 0 for c in T.phys_col))

    @cached_property
    def _logical(self) -> tuple[int, ...]:
        n = self.n
        return (0,) + tuple(self.phys_col[rho(n, i) - 1] for i in range(1, 2 * n + 1))

    def col_of(self, i: int) -> int:
        return self._logical[i]

    def column_rows(self, j: int) -> tuple[int, ...]:
        n = self.n
        return tuple(rho(n, p) for p, c in enumerate(self.phys_col, start=1) if c == j)

    def with_dot(self, j: int, i: int) -> "PartialTableau":
        """Return a copy with a dot in column ``j``, logical row ``i``."""
        p = rho(self.n, i)
        if self.phys_col[p - 1]:
            raise BoxOccupied(f"logical row {i} already holds a dot in column {self.phys_col[p - 1]}")
        pc = list(self.phys_col)
        pc[p - 1] = j
        return PartialTableau(self.n, self.j, tuple(pc))

    def advance(self) -> "PartialTableau":
        return PartialTableau(self.n, self.j + 1, self.phys_col)

    def to_tableau(self) -> Tableau:
        if not all(self.phys_col):
            raise ShapeViolation("tableau is not complete")
        return Tableau(self.n, self.phys_col)

    def encode(self) -> str:
        return f"J n={self.n} j={self.j} cols=" + ",".join(str(c) if c else "." for c in self.phys_col)


@dataclass(frozen=True)
class TPath:
    steps: tuple[int, ...]
    arrival: int


def in_codomain(n: int, j: int, i: int) -> bool:
    return j <= i <= n or n + j <= i <= 2 * n


def admissible(T: RowGrid, j: int, i: int) -> bool:
    """True when the first ``j - 1`` boxes of logical row ``i`` are empty."""
    c = T.col_of(i)
    return j <= i <= 2 * T.n and (c == 0 or c >= j)


def _require_full_columns(T: RowGrid, j: int) -> None:
    for c in range(1, j):
        if len(T.column_rows(c)) != 2:
            raise PreconditionViolated(f"column {c} is not full; cannot walk at stage {j}")


def _lower_upper(T: RowGrid, c: int) -> tuple[int, int]:
    a, b = T.column_rows(c)
    n = T.n
    return (a, b) if rho(n, a) < rho(n, b) else (b, a)


def t_path(T: RowGrid, j: int, i: int) -> TPath:
    """Walk the T-path started from the box of column ``j`` and logical row ``i``."""
    n = T.n
    if not 1 <= j <= n:
        raise PreconditionViolated(f"column {j} outside [1, {n}]")
    if not admissible(T, j, i):
        raise PreconditionViolated(f"row {i} is blocked left of column {j}")
    _require_full_columns(T, j)
    steps = [i]
    cur = i
    while not in_codomain(n, j, cur):
        if len(steps) > 2 * n:
            raise NonTermination(f"T-path from row {i} at stage {j} exceeds {2 * n} steps")
        if cur > n:
            cur = _lower_upper(T, cur - n)[1]
        else:
            cur = _lower_upper(T, cur)[0]
        steps.append(cur)
    return TPath(tuple(steps), cur)


def reverse_path(T: RowGrid, j: int, target: int) -> TPath:
    """Reconstruct the T-path ending at ``target`` by walking it backwards.

    Returns the path in forward order; its first step is the preimage of
    ``target`` under pi_j.
    """
    n = T.n
    if not 1 <= j <= n or not in_codomain(n, j, target):
        raise TargetNotInCodomain(f"{target} is not in [{j},{n}] u [{n + j},{2 * n}]")
    _require_full_columns(T, j)
    back = [target]
    cur = target
    while True:
        c = T.col_of(cur)
        if c == 0 or c >= j:
            break
        if len(back) > 2 * n:
            raise NonTermination(f"reverse walk from {target} at stage {j} exceeds {2 * n} steps")
        lower, upper = _lower_upper(T, c)
        cur = n + c if cur == upper else c
        back.append(cur)
    return TPath(tuple(reversed(back)), target)


def pi(T: RowGrid, j: int) -> dict[int, int]:
    """The table of pi_j: every admissible row mapped to its arrival."""
    n = T.n
    table = {i: t_path(T, j, i).arrival for i in range(j, 2 * n + 1) if admissible(T, j, i)}
    if len(set(table.values())) != len(table) or len(table) != 2 * (n - j + 1):
        raise InternalInconsistency(f"pi_{j} is not a bijection", getattr(T, "encode", lambda: None)())
    return table


def pi_inverse(T: RowGrid, j: int, target: int, table: dict[int, int] | None = None) -> int:
    """Preimage of ``target`` under pi_j, by lookup when a table is given."""
    if table is None:
        return reverse_path(T, j, target).steps[0]
    for i, a in table.items():
        if a == target:
            return i
    raise TargetNotInCodomain(f"{target} has no preimage under pi_{j}")


def codomain(n: int, j: int) -> list[int]:
    return list(range(j, n + 1)) + list(range(n + j, 2 * n + 1))


def partial_from_logical(n: int, j: int, columns: dict[int, int] | Sequence[int]) -> PartialTableau:
    """Build a j-tableau from ``{logical row: column}``."""
    pc = [0] * (2 * n)
    items = columns.items() if isinstance(columns, dict) else enumerate(columns, start=1)
    for i, c in items:
        if c:
            pc[rho(n, i) - 1] = c
    return PartialTableau(n, j, tuple(pc))
