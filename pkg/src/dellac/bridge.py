"""Expansion of tableaux into symplectic Dellac configurations and back.

A tableau of size n becomes the left half (rows 1..2n) of a centrally
symmetric configuration of size 2n.  Each free dot may additionally be
reflected across the vertical center line, so one tableau yields
``2 ** fr(T)`` configurations, and every configuration arises exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    DellacConfig,
    SymplecticConfig,
    Tableau,
    enumerate_spdc,
    enumerate_tableaux,
    fr,
)
from .errors import CollapseInvalid, IllegalReflection, ValidationError
from .report import Report, timed
from .sequences import r_value


@dataclass(frozen=True)
class ExpansionChoice:
    """The set of physical rows whose dot is reflected."""

    mask: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "mask", frozenset(int(p) for p in self.mask))


def free_rows(T: Tableau) -> tuple[int, ...]:
    return tuple(p for p in range(1, 2 * T.n + 1) if T.is_free(p))


def all_choices(T: Tableau) -> list[ExpansionChoice]:
    rows = free_rows(T)
    return [ExpansionChoice(frozenset(c)) for k in range(len(rows) + 1) for c in combinations(rows, k)]


def expand(T: Tableau, choice: ExpansionChoice = ExpansionChoice()) -> SymplecticConfig:
    n = T.n
    m = 2 * n
    for p in choice.mask:
        if not 1 <= p <= m or not T.is_free(p):
            raise IllegalReflection(f"the dot of row {p} is not free and cannot be reflected", index=p)
    row_col = [0] * (2 * m)
    for p, c in enumerate(T.phys_col, start=1):
        if p in choice.mask:
            c = m + 1 - c
        row_col[p - 1] = c
        row_col[2 * m - p] = m + 1 - c
    return SymplecticConfig(n, DellacConfig(m, tuple(row_col)))


def collapse(S: SymplecticConfig) -> tuple[Tableau, ExpansionChoice]:
    """Fold the lower half of ``S`` back into a tableau and its reflection mask."""
    n = S.n
    m = 2 * n
    cols, mask = [], set()
    for p in range(1, m + 1):
        c = S.row_col[p - 1]
        if c > n:
            c = m + 1 - c
            mask.add(p)
        cols.append(c)
    try:
        T = Tableau(n, tuple(cols))
        choice = ExpansionChoice(frozenset(mask))
        back = expand(T, choice)
    except (ValidationError, IllegalReflection) as exc:
        raise CollapseInvalid(f"{S.encode()} does not collapse: {exc}") from exc
    if back != S:
        raise CollapseInvalid(f"{S.encode()} does not round-trip through collapse")
    return T, choice


def toggle(S: SymplecticConfig, p: int) -> SymplecticConfig:
    """Reflect (or un-reflect) the dot of physical row ``p`` of the underlying tableau."""
    T, choice = collapse(S)
    return expand(T, ExpansionChoice(choice.mask ^ {p}))


def verify_partition(n: int, jobs: int = 1) -> Report:
    with timed() as clock:
        seen: dict[SymplecticConfig, str] = {}
        clashes = []
        weighted = 0
        for T in enumerate_tableaux(n, jobs=jobs):
            weighted += 2 ** fr(T)
            for ch in all_choices(T):
                S = expand(T, ch)
                if S in seen:
                    clashes.append(S.encode())
                seen[S] = T.encode()
        direct = enumerate_spdc(n, jobs=jobs)
        same = set(direct) == set(seen)
        expected = r_value(n)
    passed = same and not clashes and len(direct) == weighted == expected
    witnesses = clashes or sorted(S.encode() for S in set(direct) ^ set(seen))
    return Report(
        check="expansion",
        n=n,
        expected=expected,
        actual=len(seen),
        passed=passed,
        elapsed_ms=clock.ms,
        witnesses=witnesses if not passed else [],
        details={"enumerated": len(direct), "weighted_sum": weighted, "duplicates": len(clashes)},
    )
