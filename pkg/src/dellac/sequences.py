"""Exact polynomial recurrence for D_n(x), the sequence r_n and reference prefixes."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .core import enumerate_pistols, ndf
from .errors import InexactDivision
from .report import Report, timed

# Normalized median Genocchi numbers h_0, h_1, ...  (1, 1, 2, 7, 38, 295, ...)
# as printed for DC_n; the value 3098 at n = 6 comes from our own brute-force count.
H_PREFIX = (1, 1, 2, 7, 38, 295, 3098)

# Genocchi numbers G_2, G_4, ...  (1, 1, 3, 17, 155, 2073, ...); #SP_n = G_{2n+2}.
G_PREFIX = (1, 1, 3, 17, 155, 2073)

# r_0, r_1, ...  (1, 2, 10, 98, 1594, ...)
R_PREFIX = (1, 2, 10, 98, 1594)


class IntPolynomial:
    """Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntPolynomial(
            (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(m)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for k, bk in enumerate(b):
                    out[i + k] += ai * bk
        return IntPolynomial(out)

    def shift(self, s: int) -> "IntPolynomial":
        """Return p(x + s), expanded with the binomial theorem."""
        a = self.coeffs
        out = [0] * len(a)
        for k, ak in enumerate(a):
            if not ak:
                continue
            for m in range(k + 1):
                out[m] += ak * comb(k, m) * s ** (k - m)
        return IntPolynomial(out)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


@lru_cache(maxsize=None)
def poly_D(n: int) -> IntPolynomial:
    """D_0 = 1 and D_{k+1}(x) = (x+1)(x+2) D_k(x+2) - x(x+1) D_k(x)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return IntPolynomial((1,))
    prev = poly_D(n - 1)
    x1x2 = IntPolynomial((2, 3, 1))
    xx1 = IntPolynomial((0, 1, 1))
    return x1x2 * prev.shift(2) - xx1 * prev


def r_value(n: int) -> int:
    value = poly_D(n)(1)
    q, rem = divmod(value, 2**n)
    if rem:
        raise InexactDivision(f"D_{n}(1) = {value} is not divisible by 2^{n}")
    return q


def r_seq(k: int) -> list[int]:
    """r_0, ..., r_k with r_n = D_n(1) / 2^n."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return [r_value(n) for n in range(k + 1)]


def pistol_weight_sum(n: int, jobs: int = 1) -> int:
    """Sum of 2^ndf(f) over all surjective pistols of SP_n."""
    return sum(2 ** ndf(f) for f in enumerate_pistols(n, jobs=jobs))


def verify_eq1(n: int, jobs: int = 1) -> Report:
    """Compare the enumerated sum of 2^ndf over SP_n with r_n from the recurrence."""
    with timed() as t:
        actual = pistol_weight_sum(n, jobs=jobs)
        expected = r_value(n)
    return Report("eq1", n, expected, actual, expected == actual, t.ms)


def read_bfile(path: str | Path) -> dict[int, int]:
    """Read an OEIS b-file: ``<index> <value>`` per line, ``#`` comments allowed."""
    out: dict[int, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected '<index> <value>'")
            out[int(parts[0])] = int(parts[1])
    return out


def compare_bfile(values: Sequence[int], bfile: dict[int, int], offset: int = 0) -> list[tuple[int, int, int]]:
    """Return ``(index, ours, theirs)`` for every index where both sides disagree."""
    bad = []
    for k, v in enumerate(values):
        idx = k + offset
        if idx in bfile and bfile[idx] != v:
            bad.append((idx, v, bfile[idx]))
    return bad
