"""Insertion of letter-labeled dots and the construction of Phi(f).

A pistol is turned into a tableau column by column.  Each column receives
an odd dot and an even dot, both tagged with a letter ``a`` or ``b``, and
each is placed through the pi-preimage of a target row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .core import SurjectivePistol, Tableau
from .errors import InternalInconsistency
from .tpath import PartialTableau, in_codomain, pi, pi_inverse

A = "a"
B = "b"


@dataclass(frozen=True)
class LabeledPartialTableau:
    """A j-tableau whose dots carry letters, keyed by logical row."""

    base: PartialTableau
    ins_labels: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        T = self.base
        occupied = {i for i in range(1, 2 * T.n + 1) if T.col_of(i)}
        if set(self.ins_labels) != occupied:
            raise InternalInconsistency("every dot needs exactly one letter", T.encode())
        if any(v not in (A, B) for v in self.ins_labels.values()):
            raise InternalInconsistency("letters must be 'a' or 'b'", T.encode())
        object.__setattr__(self, "ins_labels", MappingProxyType(dict(self.ins_labels)))

    @classmethod
    def empty(cls, n: int) -> "LabeledPartialTableau":
        return cls(PartialTableau.empty(n), {})

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def j(self) -> int:
        return self.base.j

    def letter(self, i: int) -> str | None:
        return self.ins_labels.get(i)

    def check_stage(self) -> None:
        """Columns after ``j`` are empty and column ``j`` holds at most one dot."""
        T = self.base
        for c in range(T.j, T.n + 1):
            k = len(T.column_rows(c))
            if (c > T.j and k) or k > 1:
                raise InternalInconsistency(f"column {c} holds {k} dots at stage {T.j}", T.encode())


@dataclass(frozen=True)
class PhiResult:
    """Output of the builder: the tableau, its letters, and the rules fired per column."""

    tableau: Tableau
    letters: Mapping[int, str]
    stage_rules: Mapping[int, str]
    insertion_rules: Mapping[int, tuple[str, str]]


def insert_at_box(T: PartialTableau, j: int, target: int) -> tuple[PartialTableau, int]:
    """Plot a dot in column ``j`` at the row whose T-path arrives at ``target``.

    Returns the new tableau and the logical row that received the dot.
    """
    row = pi_inverse(T, j, target)
    return T.with_dot(j, row), row


def fj_insert(
    T: LabeledPartialTableau, f: SurjectivePistol, j: int, letter: str, h: int
) -> tuple[LabeledPartialTableau, str, int]:
    """Insert a dot with ``letter`` at height ``h`` into column ``j``.

    Returns the updated tableau, the rule identifier and the logical row used.
    """
    n = T.n
    if not 0 <= h <= n - j:
        raise InternalInconsistency(f"height {h} outside [0, {n - j}] at stage {j}")
    i = j + h
    occupant = T.letter(i)
    if i == j:
        if occupant is None:
            target, rule = j, "1.(a)"
        else:
            target, rule = (j if letter == A else n + j), "1.(b)"
    elif occupant is None:
        if letter == B and f(2 * i) == 2 * i:
            target, rule = n + i, "2.(a)i."
        else:
            target, rule = i, "2.(a)ii."
    else:
        target, rule = (i if letter == occupant else n + i), "2.(b)"
    base, row = insert_at_box(T.base, j, target)
    letters = dict(T.ins_labels)
    letters[row] = letter
    return LabeledPartialTableau(base, letters), rule, row


def _check_hypothesis(T: LabeledPartialTableau, f: SurjectivePistol, j: int) -> None:
    T.check_stage()
    if T.base.col_of(j) == 0 and f(2 * j) > 2 * j:
        if any(f(k) == 2 * j for k in range(1, 2 * j - 1)):
            raise InternalInconsistency(f"hypothesis (B) fails at stage {j}", f.encode())


def stage(T: LabeledPartialTableau, f: SurjectivePistol, j: int):
    """Fill column ``j``; returns ``(T', stage rule, (odd rule, even rule))``."""
    _check_hypothesis(T, f, j)
    d_o = f(2 * j - 1) // 2 - j
    d_e = f(2 * j) // 2 - j
    here = T.letter(j)
    if here is None:
        (l_o, l_e), rule = (A, B), "I.1-"
    elif here == A:
        (l_o, l_e), rule = (A, B), "I.2-a)"
    elif d_o < d_e:
        (l_o, l_e), rule = (B, B), "I.2-b)i."
    else:
        (l_o, l_e), rule = (A, A), "I.2-b)ii."
    h_o = d_o
    h_e = 0 if (l_e == A and d_o == d_e) else d_e
    T, r_o, _ = fj_insert(T, f, j, l_o, h_o)
    T, r_e, _ = fj_insert(T, f, j, l_e, h_e)
    return LabeledPartialTableau(T.base.advance(), T.ins_labels), rule, (r_o, r_e)


def run_from(T: LabeledPartialTableau, f: SurjectivePistol):
    """Run the remaining stages ``T.j .. n``; returns the final state and traces."""
    stage_rules: dict[int, str] = {}
    ins_rules: dict[int, tuple[str, str]] = {}
    for j in range(T.j, f.n + 1):
        T, stage_rules[j], ins_rules[j] = stage(T, f, j)
    return T, stage_rules, ins_rules


def build_Phi(f: SurjectivePistol) -> PhiResult:
    """Build the tableau Phi(f) together with its letters and rule trace."""
    T, stage_rules, ins_rules = run_from(LabeledPartialTableau.empty(f.n), f)
    return PhiResult(
        T.base.to_tableau(),
        T.ins_labels,
        MappingProxyType(stage_rules),
        MappingProxyType(ins_rules),
    )


def Phi(f: SurjectivePistol) -> Tableau:
    return build_Phi(f).tableau


__all__ = [
    "A",
    "B",
    "LabeledPartialTableau",
    "PhiResult",
    "insert_at_box",
    "fj_insert",
    "stage",
    "run_from",
    "build_Phi",
    "Phi",
    "in_codomain",
    "pi",
]
