"""Pistol labeling of tableaux, the map phi, twin dots and grounded dots.

Every dot of a tableau receives a label ``t_h^p``: a type ``t`` in
{α, β}, a digit ``h`` and a parity ``p`` in {o, e}.  Columns are processed
from right to left; labels of a column only depend on columns to its right
and on the T-path bijection at that column.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, NamedTuple

from .core import StatVector, SurjectivePistol, Tableau, rho
from .errors import InternalInconsistency
from .tpath import pi

ALPHA = "α"
BETA = "β"
ODD = "o"
EVEN = "e"


class PistolLabel(NamedTuple):
    type: str
    digit: int
    parity: str

    def __str__(self) -> str:
        return f"{self.type}{self.digit}{self.parity}"

    def to_json(self) -> dict:
        return {"type": self.type, "digit": self.digit, "parity": self.parity}


BETA_0_E = PistolLabel(BETA, 0, EVEN)
ALPHA_0_O = PistolLabel(ALPHA, 0, ODD)


@dataclass(frozen=True)
class LabeledTableau:
    """A tableau together with its pistol labels and the rules that produced them.

    ``labels``, ``trace`` and ``parity_trace`` are keyed by logical row.
    """

    base: Tableau
    labels: Mapping[int, PistolLabel]
    trace: Mapping[int, str]
    parity_trace: Mapping[int, str]

    @property
    def n(self) -> int:
        return self.base.n

    def column_labels(self, j: int) -> tuple[PistolLabel, PistolLabel]:
        a, b = self.base.column_rows(j)
        return self.labels[a], self.labels[b]

    def has_beta0e(self, j: int) -> bool:
        return BETA_0_E in self.column_labels(j)

    def odd_even(self, j: int) -> tuple[int, int]:
        """Logical rows of the o-dot and the e-dot of column ``j``."""
        a, b = self.base.column_rows(j)
        return (a, b) if self.labels[a].parity == ODD else (b, a)


def d_min(T: Tableau, i: int) -> int:
    """Logical row of the twin of index ``i`` lying in the leftmost column."""
    n = T.n
    return i if T.col_of(i) <= T.col_of(n + i) else n + i


def _type_rule(T, j, i, ip, h, other, digits, types, labels) -> tuple[str, str]:
    n = T.n
    jp = j + h
    if h > 0:
        la, lb = (labels[r] for r in T.column_rows(jp))
        gamma, gbar = (ALPHA, BETA) if la.type != lb.type else (BETA, ALPHA)
        if BETA_0_E in (la, lb):
            return (ALPHA if ip == jp else BETA), "II.1-a)"
        return (gamma if ip == d_min(T, jp) else gbar), "II.1-b)"
    if digits[other] == 0:
        return (ALPHA if ip == j else BETA), "II.2-a)"
    if types[other] == ALPHA:
        return (ALPHA if (i != ip and ip == j) else BETA), "II.2-b)i."
    if types[other] == BETA:
        return (ALPHA if ip == d_min(T, j) else BETA), "II.2-b)ii."
    raise InternalInconsistency(f"no type rule applies to row {i} of column {j}", T.encode())


@lru_cache(maxsize=1 << 16)
def pistol_labels(T: Tableau) -> LabeledTableau:
    """Run the labeling algorithm on ``T`` (results are cached per tableau)."""
    n = T.n
    labels: dict[int, PistolLabel] = {}
    trace: dict[int, str] = {}
    ptrace: dict[int, str] = {}
    for j in range(n, 0, -1):
        table = pi(T, j)
        rows = T.column_rows(j)
        arrival = {i: table[i] for i in rows}
        digits = {i: (a - j if a <= n else a - n - j) for i, a in arrival.items()}
        types: dict[int, str] = {}
        for i in sorted(rows, key=lambda r: digits[r] == 0):
            other = rows[1] if i == rows[0] else rows[0]
            types[i], trace[i] = _type_rule(T, j, i, arrival[i], digits[i], other, digits, types, labels)
        r1, r2 = rows
        if types[r1] != types[r2]:
            par = {r: (ODD if types[r] == ALPHA else EVEN) for r in rows}
            rule = "III.1-"
        else:
            if digits[r1] == digits[r2]:
                raise InternalInconsistency(
                    f"column {j}: equal types and equal digits {digits[r1]}", T.encode()
                )
            low, high = (r1, r2) if digits[r1] < digits[r2] else (r2, r1)
            if types[r1] == ALPHA:
                par, rule = {low: EVEN, high: ODD}, "III.2-a)"
            else:
                par, rule = {low: ODD, high: EVEN}, "III.2-b)"
        for r in rows:
            labels[r] = PistolLabel(types[r], digits[r], par[r])
            ptrace[r] = rule
    return LabeledTableau(T, MappingProxyType(labels), MappingProxyType(trace), MappingProxyType(ptrace))


def phi(T: Tableau) -> SurjectivePistol:
    """The surjective pistol read off the labels of ``T``."""
    L = pistol_labels(T)
    f = []
    for j in range(1, T.n + 1):
        o, e = L.odd_even(j)
        ho, le = L.labels[o].digit, L.labels[e]
        f.append(2 * (j + ho))
        if le.type == ALPHA and le.digit == 0:
            f.append(2 * (j + ho))
        else:
            f.append(2 * (j + le.digit))
    return SurjectivePistol(T.n, tuple(f))


def grounded(T: Tableau, i: int) -> bool:
    """True when ``d_{n+i}`` is not free and column ``i`` holds a β_0^e dot."""
    n = T.n
    return not T.is_free(rho(n, n + i)) and pistol_labels(T).has_beta0e(i)


def ngr_vec(T: Tableau) -> StatVector:
    return StatVector(int(not grounded(T, i)) for i in range(1, T.n + 1))


def ngr(T: Tableau) -> int:
    return ngr_vec(T).total


def epsilon(T: Tableau, j: int) -> frozenset[PistolLabel]:
    return frozenset(pistol_labels(T).column_labels(j))
