"""Fibers of phi: switch and mute moves, the T-tilde test, and the weighted-sum check.

Every fiber of phi contains exactly one tableau built by Phi.  The switch
move re-routes T-paths that end at twin rows; the mute move recolors the
twin pair of one column and re-runs the builder from the next column.
Together they reach every member of the fiber.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .core import SurjectivePistol, Tableau, enumerate_tableaux, fr, ndf, rho
from .errors import PreconditionViolated, RowCollision
from .insertion import A, B, LabeledPartialTableau, Phi, run_from
from .labeling import ALPHA, BETA, d_min, phi, pistol_labels
from .report import Report, timed
from .tpath import PartialTableau, pi


@dataclass(frozen=True)
class FiberSignature:
    S_set: tuple[int, ...]
    mu: tuple[int, ...]
    C_set: tuple[int, ...]
    t_map: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "S": list(self.S_set),
            "mu": list(self.mu),
            "C": list(self.C_set),
            "t": {str(j): t for j, t in sorted(self.t_map.items())},
        }


def signature(T: Tableau) -> FiberSignature:
    n = T.n
    L = pistol_labels(T)
    S, mu = [], []
    for i in range(1, n + 1):
        if T.is_free(rho(n, n + i)) or T.col_of(i) == T.col_of(n + i) or L.has_beta0e(i):
            continue
        S.append(i)
        mu.append(1 if d_min(T, i) == i else -1)
    C, t = [], {}
    for j in range(1, n + 1):
        r1, r2 = T.column_rows(j)
        if abs(r1 - r2) != n:
            continue
        i = min(r1, r2)
        if not L.has_beta0e(i):
            C.append(j)
            t[j] = L.labels[i].type
    return FiberSignature(tuple(S), tuple(mu), tuple(C), t)


def is_tilde(T: Tableau) -> bool:
    """Membership in the image of Phi: all mu are 1 and all t-labels are α."""
    sig = signature(T)
    return all(m == 1 for m in sig.mu) and all(v == ALPHA for v in sig.t_map.values())


def switch(T: Tableau, mu: Sequence[int]) -> Tableau:
    """Rebuild ``T`` so that its mu-vector becomes ``mu``; phi is unchanged."""
    n = T.n
    L = pistol_labels(T)
    S = signature(T).S_set
    mu = tuple(mu)
    if len(mu) != len(S) or any(m not in (1, -1) for m in mu):
        raise PreconditionViolated(f"mu must be a ±1 vector of length {len(S)}, got {mu}")
    route = {}
    for k, i in enumerate(S):
        route[i] = route[n + i] = k
    out = PartialTableau.empty(n)
    for j in range(1, n + 1):
        old = pi(T, j)
        inv = {v: r for r, v in pi(out, j).items()}
        new_rows = []
        for r in T.column_rows(j):
            rp = old[r]
            if rp in route:
                k = route[rp]
                ik = S[k]
                if j == ik and L.trace[r] == "II.2-b)i.":
                    # this type depends on which twin row is reached, not on d_min
                    new_rows.append(inv[rp])
                    continue
                rg, rgb = (ik, n + ik) if mu[k] == 1 else (n + ik, ik)
                new_rows.append(inv[rg if rp == d_min(T, ik) else rgb])
            else:
                new_rows.append(inv[rp])
        if new_rows[0] == new_rows[1]:
            raise RowCollision(f"both dots of column {j} routed to row {new_rows[0]}")
        for r in new_rows:
            out = out.with_dot(j, r)
        out = out.advance()
    return out.to_tableau()


def mute(T: Tableau, j0: int, gamma: str) -> Tableau:
    """Give the twin pair of column ``j0`` the t-label ``gamma`` and rebuild the rest."""
    return mute_labeled(T, j0, gamma).base.to_tableau()


def mute_labeled(T: Tableau, j0: int, gamma: str) -> LabeledPartialTableau:
    """Like :func:`mute` but keeps the letters of the rebuilt tableau."""
    n = T.n
    sig = signature(T)
    if j0 not in sig.C_set:
        raise PreconditionViolated(f"column {j0} is not in C(T) = {list(sig.C_set)}")
    if gamma not in (ALPHA, BETA):
        raise PreconditionViolated(f"gamma must be {ALPHA} or {BETA}")
    f = phi(T)
    Tt = switch(T, (1,) * len(sig.S_set))
    Lt = pistol_labels(Tt)
    letters = {}
    pc = [0] * (2 * n)
    for i in range(1, 2 * n + 1):
        c = Tt.col_of(i)
        if c < j0:
            letters[i] = A if Lt.labels[i].type == ALPHA else B
            pc[rho(n, i) - 1] = c
    r1, r2 = Tt.column_rows(j0)
    i = min(r1, r2)
    c, cbar = (A, B) if gamma == ALPHA else (B, A)
    letters[i], letters[n + i] = c, cbar
    pc[rho(n, i) - 1] = pc[rho(n, n + i) - 1] = j0
    start = LabeledPartialTableau(PartialTableau(n, j0 + 1, tuple(pc)), letters)
    final, _, _ = run_from(start, f)
    return final


def neighbours(T: Tableau) -> Iterable[Tableau]:
    sig = signature(T)
    for mu in product((1, -1), repeat=len(sig.S_set)):
        yield switch(T, mu)
    for j in sig.C_set:
        for gamma in (ALPHA, BETA):
            yield mute(T, j, gamma)


def fiber(f: SurjectivePistol, mode: str = "closure") -> list[Tableau]:
    """All tableaux mapped to ``f`` by phi, sorted.

    ``closure`` explores switch/mute moves from Phi(f); ``brute`` filters
    the whole of Tab_n and serves as an oracle.
    """
    if mode == "brute":
        return sorted(T for T in enumerate_tableaux(f.n) if phi(T) == f)
    if mode != "closure":
        raise ValueError(f"unknown fiber mode {mode!r}")
    start = Phi(f)
    seen = {start.encode(): start}
    todo = deque([start])
    while todo:
        for U in neighbours(todo.popleft()):
            key = U.encode()
            if key not in seen:
                seen[key] = U
                todo.append(U)
    return sorted(seen.values())


def fiber_sum_check(f: SurjectivePistol, mode: str = "closure") -> Report:
    with timed() as clock:
        members = fiber(f, mode)
        lhs = sum(2 ** fr(T) for T in members)
        rhs = 2 ** ndf(f)
    bad = [T.encode() for T in members if phi(T) != f]
    return Report(
        check="fiber-sum",
        n=f.n,
        expected=rhs,
        actual=lhs,
        passed=lhs == rhs and not bad,
        elapsed_ms=clock.ms,
        witnesses=bad or [T.encode() for T in members],
        details={"pistol": f.encode(), "size": len(members), "mode": mode},
    )
