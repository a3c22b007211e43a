"""The four object families, their invariants, encodings and enumerators.

Rows are numbered from the bottom starting at 1 and columns from the left
starting at 1.  Every array field is stored as a tuple indexed by *physical*
row, so ``phys_col[p - 1]`` is the column of the dot in physical row ``p``.
Tableaux additionally carry logical row names obtained through :func:`rho`.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence, Union

from .errors import (
    ColumnCountViolation,
    DiagonalViolation,
    NotSurjective,
    ParseError,
    ShapeViolation,
    SymmetryViolation,
    ValueBelowIndex,
    ValueOutOfRange,
)

__all__ = [
    "rho",
    "StatVector",
    "DellacConfig",
    "SymplecticConfig",
    "Tableau",
    "SurjectivePistol",
    "make_dellac",
    "make_spdc",
    "make_tableau",
    "make_pistol",
    "enumerate_dellac",
    "enumerate_spdc",
    "enumerate_tableaux",
    "enumerate_pistols",
    "fr_vec",
    "fr",
    "ndf_vec",
    "ndf",
    "doubled_fixed_points",
    "encode",
    "decode",
    "to_json",
    "from_json",
    "tableau_count",
]


def rho(n: int, i: int) -> int:
    """Convert a logical row name to its physical position (and back).

    Logical rows read ``1, ..., n, 2n-1, 2n-2, ..., n+1, 2n`` from bottom to
    top, so the map is an involution of ``[1, 2n]``.
    """
    if n < 1 or not 1 <= i <= 2 * n:
        raise ValueError(f"row {i} outside [1, {2 * n}]")
    if i <= n or i == 2 * n:
        return i
    return 3 * n - i


class StatVector(tuple):
    """A 0/1 vector statistic indexed from 1 to n."""

    def __new__(cls, bits: Iterable[int]):
        return super().__new__(cls, (int(b) for b in bits))

    @property
    def n(self) -> int:
        return len(self)

    def bit(self, i: int) -> int:
        return tuple.__getitem__(self, i - 1)

    @property
    def total(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "[" + ",".join(str(b) for b in self) + "]"


def _check_length(n: int, values: Sequence[int], length: int, what: str) -> tuple[int, ...]:
    if not isinstance(n, int) or n < 1:
        raise ShapeViolation(f"n must be a positive integer, got {n!r}")
    values = tuple(int(v) for v in values)
    if len(values) != length:
        raise ShapeViolation(f"{what} needs {length} entries for n={n}, got {len(values)}")
    return values


def _check_two_per_column(values: tuple[int, ...], ncols: int) -> None:
    counts = [0] * (ncols + 1)
    for p, c in enumerate(values, start=1):
        if not 1 <= c <= ncols:
            raise ValueOutOfRange(f"row {p} holds column {c}, outside [1, {ncols}]", index=p)
        counts[c] += 1
        if counts[c] > 2:
            raise ColumnCountViolation(f"column {c} receives a third dot in row {p}", index=c)
    for c in range(1, ncols + 1):
        if counts[c] != 2:
            raise ColumnCountViolation(f"column {c} holds {counts[c]} dots instead of 2", index=c)


@dataclass(frozen=True, order=True)
class DellacConfig:
    n: int
    row_col: tuple[int, ...]

    def __post_init__(self):
        values = _check_length(self.n, self.row_col, 2 * self.n, "row_col")
        object.__setattr__(self, "row_col", values)
        _check_two_per_column(values, self.n)
        for i, j in enumerate(values, start=1):
            if not j <= i <= j + self.n:
                raise DiagonalViolation(
                    f"dot ({j},{i}) violates {j} <= {i} <= {j + self.n}", index=i
                )

    def encode(self) -> str:
        return f"D n={self.n} cols=" + ",".join(map(str, self.row_col))


@dataclass(frozen=True, order=True)
class SymplecticConfig:
    """A Dellac configuration of size 2n invariant under the central reflection."""

    n: int
    base: DellacConfig

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ShapeViolation(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.base, DellacConfig):
            object.__setattr__(self, "base", DellacConfig(2 * self.n, tuple(self.base)))
        if self.base.n != 2 * self.n:
            raise ShapeViolation(f"base has size {self.base.n}, expected {2 * self.n}")
        rc = self.base.row_col
        rows, cols = 4 * self.n, 2 * self.n
        for i in range(1, rows + 1):
            if rc[rows - i] != cols + 1 - rc[i - 1]:
                raise SymmetryViolation(
                    f"row {i} (column {rc[i - 1]}) is not mirrored by row {rows + 1 - i}",
                    index=i,
                )

    @property
    def row_col(self) -> tuple[int, ...]:
        return self.base.row_col

    def encode(self) -> str:
        return f"S n={self.n} cols=" + ",".join(map(str, self.base.row_col))


@dataclass(frozen=True, order=True)
class Tableau:
    """An element of Tab_n: one dot per row, two per column, dots on or above the diagonal."""

    n: int
    phys_col: tuple[int, ...]

    def __post_init__(self):
        values = _check_length(self.n, self.phys_col, 2 * self.n, "phys_col")
        object.__setattr__(self, "phys_col", values)
        _check_two_per_column(values, self.n)
        for p, c in enumerate(values, start=1):
            if c > p:
                raise DiagonalViolation(f"dot ({c},{p}) lies below the diagonal", index=p)

    # logical view -----------------------------------------------------

    @cached_property
    def _logical(self) -> tuple[int, ...]:
        n = self.n
        return (0,) + tuple(self.phys_col[rho(n, i) - 1] for i in range(1, 2 * n + 1))

    @cached_property
    def _columns(self) -> tuple[tuple[int, int], ...]:
        n = self.n
        rows: list[list[int]] = [[] for _ in range(n + 1)]
        for p, c in enumerate(self.phys_col, start=1):
            rows[c].append(rho(n, p))
        return ((0, 0),) + tuple((r[0], r[1]) for r in rows[1:])

    def col_of(self, i: int) -> int:
        """Column of the dot in logical row ``i``."""
        return self._logical[i]

    def column_rows(self, j: int) -> tuple[int, int]:
        """Logical names of the two dots of column ``j``, physically lower one first."""
        return self._columns[j]

    def is_free(self, p: int) -> bool:
        """Free-dot predicate on the dot of *physical* row ``p``."""
        return p >= 2 * self.n + 1 - self.phys_col[p - 1]

    def encode(self) -> str:
        return f"T n={self.n} cols=" + ",".join(map(str, self.phys_col))


@dataclass(frozen=True, order=True)
class SurjectivePistol:
    n: int
    f: tuple[int, ...]

    def __post_init__(self):
        values = _check_length(self.n, self.f, 2 * self.n, "f")
        object.__setattr__(self, "f", values)
        for j, v in enumerate(values, start=1):
            if v % 2 or not 2 <= v <= 2 * self.n:
                raise ValueOutOfRange(f"f({j}) = {v} is not an even value in [2, {2 * self.n}]", index=j)
            if v < j:
                raise ValueBelowIndex(f"f({j}) = {v} < {j}", index=j)
        hit = set(values)
        for v in range(2, 2 * self.n + 1, 2):
            if v not in hit:
                raise NotSurjective(f"value {v} is never attained", index=v)

    def __call__(self, j: int) -> int:
        return self.f[j - 1]

    def encode(self) -> str:
        return f"P n={self.n} f=" + ",".join(map(str, self.f))


AnyObject = Union[DellacConfig, SymplecticConfig, Tableau, SurjectivePistol]


def make_dellac(n: int, row_col: Sequence[int]) -> DellacConfig:
    return DellacConfig(n, tuple(row_col))


def make_spdc(n: int, row_col: Sequence[int]) -> SymplecticConfig:
    return SymplecticConfig(n, DellacConfig(2 * n, tuple(row_col)))


def make_tableau(n: int, phys_col: Sequence[int]) -> Tableau:
    return Tableau(n, tuple(phys_col))


def make_pistol(n: int, f: Sequence[int]) -> SurjectivePistol:
    return SurjectivePistol(n, tuple(f))


# statistics -------------------------------------------------------------


def fr_vec(T: Tableau) -> StatVector:
    """Bit i is set iff the dot with logical name n+i is free."""
    n = T.n
    return StatVector(int(T.is_free(rho(n, n + i))) for i in range(1, n + 1))


def fr(T: Tableau) -> int:
    return sum(T.is_free(p) for p in range(1, 2 * T.n + 1))


def doubled_fixed_points(f: SurjectivePistol) -> frozenset[int]:
    n = f.n
    out = set()
    for i in range(1, n):
        v = 2 * i
        if f(v) == v and any(f(k) == v for k in range(1, v)):
            out.add(v)
    return frozenset(out)


def ndf_vec(f: SurjectivePistol) -> StatVector:
    dfp = doubled_fixed_points(f)
    return StatVector(int(2 * i not in dfp) for i in range(1, f.n + 1))


def ndf(f: SurjectivePistol) -> int:
    return f.n - len(doubled_fixed_points(f))


def tableau_count(n: int) -> int:
    from math import factorial

    return factorial(n + 1) * factorial(n) // 2**n


# encodings --------------------------------------------------------------

_KINDS = {"D": "dellac", "S": "spdc", "T": "tableau", "P": "pistol"}


def encode(obj: AnyObject) -> str:
    return obj.encode()


def decode(text: str) -> AnyObject:
    """Parse a canonical text encoding such as ``T n=2 cols=1,1,2,2``."""
    parts = text.split()
    if len(parts) != 3 or parts[0] not in _KINDS:
        raise ParseError(f"cannot parse {text!r}")
    prefix, n_part, data_part = parts
    key = "f" if prefix == "P" else "cols"
    if not n_part.startswith("n=") or not data_part.startswith(key + "="):
        raise ParseError(f"cannot parse {text!r}")
    try:
        n = int(n_part[2:])
        values = [int(v) for v in data_part[len(key) + 1 :].split(",")]
    except ValueError as exc:
        raise ParseError(f"cannot parse {text!r}") from exc
    return _build(_KINDS[prefix], n, values)


def _build(kind: str, n: int, values: Sequence[int]) -> AnyObject:
    if kind == "dellac":
        return make_dellac(n, values)
    if kind == "spdc":
        return make_spdc(n, values)
    if kind == "tableau":
        return make_tableau(n, values)
    if kind == "pistol":
        return make_pistol(n, values)
    raise ParseError(f"unknown kind {kind!r}")


def to_json(obj: AnyObject) -> dict:
    if isinstance(obj, SurjectivePistol):
        return {"kind": "pistol", "n": obj.n, "f": list(obj.f)}
    kind = {DellacConfig: "dellac", SymplecticConfig: "spdc", Tableau: "tableau"}[type(obj)]
    cols = obj.phys_col if isinstance(obj, Tableau) else obj.row_col
    return {"kind": kind, "n": obj.n, "cols": list(cols)}


def from_json(data: Union[str, dict]) -> AnyObject:
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    values = data.get("f" if kind == "pistol" else "cols")
    if values is None or "n" not in data:
        raise ParseError(f"malformed JSON object {data!r}")
    return _build(kind, int(data["n"]), values)


# enumeration ------------------------------------------------------------
#
# Each enumerator is a depth-first search over a fixed sequence of slots
# (rows, positions or columns) trying choices in increasing order, so the
# plain search already yields ascending lexicographic order.  With jobs > 1
# the tree is cut at a fixed depth, the subtrees are explored by worker
# processes and the chunks are concatenated in prefix order.


def _split(
    expand: Callable[[int, tuple], Iterator[tuple]],
    n: int,
    jobs: int,
    depth: int,
) -> list[tuple]:
    if jobs <= 1:
        return list(expand(n, ()))
    prefixes = list(expand(n, (), depth))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunks = pool.map(_expand_prefix, [(expand, n, p) for p in prefixes])
        return [leaf for chunk in chunks for leaf in chunk]


def _expand_prefix(args) -> list[tuple]:
    expand, n, prefix = args
    return list(expand(n, prefix))


def _dellac_rows(n: int, prefix: tuple, stop: int | None = None) -> Iterator[tuple]:
    counts = [0] * (n + 1)
    for c in prefix:
        counts[c] += 1
    rows = list(prefix)
    last = 2 * n if stop is None else min(2 * n, stop)

    def rec(i: int) -> Iterator[tuple]:
        if i > last:
            yield tuple(rows)
            return
        for j in range(max(1, i - n), min(n, i) + 1):
            if counts[j] < 2:
                counts[j] += 1
                rows.append(j)
                yield from rec(i + 1)
                rows.pop()
                counts[j] -= 1

    yield from rec(len(prefix) + 1)


def _tableau_rows(n: int, prefix: tuple, stop: int | None = None) -> Iterator[tuple]:
    counts = [0] * (n + 1)
    for c in prefix:
        counts[c] += 1
    rows = list(prefix)
    last = 2 * n if stop is None else min(2 * n, stop)

    def rec(p: int) -> Iterator[tuple]:
        if p > last:
            yield tuple(rows)
            return
        for j in range(1, min(n, p) + 1):
            if counts[j] < 2:
                counts[j] += 1
                rows.append(j)
                yield from rec(p + 1)
                rows.pop()
                counts[j] -= 1

    yield from rec(len(prefix) + 1)


def _pistol_values(n: int, prefix: tuple, stop: int | None = None) -> Iterator[tuple]:
    hit = [0] * (2 * n + 1)
    for v in prefix:
        hit[v] += 1
    vals = list(prefix)
    last = 2 * n if stop is None else min(2 * n, stop)

    def rec(j: int) -> Iterator[tuple]:
        if j > last:
            yield tuple(vals)
            return
        for v in range(j + (j % 2), 2 * n + 1, 2):
            hit[v] += 1
            vals.append(v)
            # an even value j can no longer be reached after position j
            if j % 2 or hit[j]:
                yield from rec(j + 1)
            vals.pop()
            hit[v] -= 1

    yield from rec(len(prefix) + 1)


def _spdc_columns(n: int, prefix: tuple, stop: int | None = None) -> Iterator[tuple]:
    """Choose the two rows of each left column 1..n of a size-2n configuration.

    The chosen rows together with their mirrors must tile ``[1, 4n]``; the
    prefix and the leaves are flat tuples ``(r1, r2, r1', r2', ...)``.
    """
    rows = 4 * n
    used = [False] * (rows + 1)
    for r in prefix:
        used[r] = used[rows + 1 - r] = True
    chosen = list(prefix)
    last = n if stop is None else min(n, stop)

    def rec(j: int) -> Iterator[tuple]:
        if j > last:
            yield tuple(chosen)
            return
        lo, hi = j, j + 2 * n
        for r1 in range(lo, hi + 1):
            if used[r1]:
                continue
            used[r1] = used[rows + 1 - r1] = True
            for r2 in range(r1 + 1, hi + 1):
                if used[r2]:
                    continue
                used[r2] = used[rows + 1 - r2] = True
                chosen.extend((r1, r2))
                yield from rec(j + 1)
                del chosen[-2:]
                used[r2] = used[rows + 1 - r2] = False
            used[r1] = used[rows + 1 - r1] = False

    yield from rec(len(prefix) // 2 + 1)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def enumerate_dellac(n: int, jobs: int = 1) -> list[DellacConfig]:
    """All of DC_n in ascending lexicographic order of ``row_col``."""
    _check_n(n)
    leaves = _split(_dellac_rows, n, jobs, depth=min(3, 2 * n))
    return [DellacConfig(n, rc) for rc in leaves]


def enumerate_tableaux(n: int, jobs: int = 1) -> list[Tableau]:
    """All of Tab_n in ascending lexicographic order of ``phys_col``."""
    _check_n(n)
    leaves = _split(_tableau_rows, n, jobs, depth=min(4, 2 * n))
    return [Tableau(n, pc) for pc in leaves]


def enumerate_pistols(n: int, jobs: int = 1) -> list[SurjectivePistol]:
    """All of SP_n in ascending lexicographic order of ``f``."""
    _check_n(n)
    leaves = _split(_pistol_values, n, jobs, depth=min(3, 2 * n))
    return [SurjectivePistol(n, f) for f in leaves]


def enumerate_spdc(n: int, jobs: int = 1) -> list[SymplecticConfig]:
    """All of SpDC_2n, built from the left half and its central mirror."""
    _check_n(n)
    rows, cols = 4 * n, 2 * n
    configs = set()
    for leaf in _split(_spdc_columns, n, jobs, depth=1):
        rc = [0] * rows
        for k, r in enumerate(leaf):
            j = k // 2 + 1
            rc[r - 1] = j
            rc[rows - r] = cols + 1 - j
        configs.add(SymplecticConfig(n, DellacConfig(cols, tuple(rc))))
    return sorted(configs)
