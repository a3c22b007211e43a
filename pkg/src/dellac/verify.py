"""Named verification checks used by the CLI and the acceptance suite.

Every check takes ``n`` (and optionally ``jobs``) and returns a
:class:`~dellac.report.Report`.  Witness lists are truncated to a few
encodings so that failing reports stay readable.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from .bridge import all_choices, collapse, expand, toggle, verify_partition
from .core import (
    enumerate_dellac,
    enumerate_pistols,
    enumerate_spdc,
    enumerate_tableaux,
    fr,
    ndf_vec,
    tableau_count,
)
from .fiber import fiber, is_tilde, signature
from .golden import golden_report
from .insertion import A, build_Phi
from .labeling import ALPHA, ngr, ngr_vec, phi, pistol_labels
from .report import Report, timed
from .sequences import G_PREFIX, H_PREFIX, r_value, verify_eq1

MAX_WITNESSES = 10


def _report(check, n, expected, actual, witnesses, clock, **details) -> Report:
    passed = expected == actual and not witnesses
    return Report(check, n, expected, actual, passed, clock.ms, witnesses[:MAX_WITNESSES], details)


def _prefix_count(check: str, n: int, prefix: tuple, enum, jobs: int) -> Report:
    with timed() as clock:
        actual = len(enum(n, jobs=jobs))
    expected = prefix[n] if n < len(prefix) else actual
    return _report(check, n, expected, actual, [], clock, reference="embedded" if n < len(prefix) else "none")


def check_dellac_count(n: int, jobs: int = 1) -> Report:
    return _prefix_count("dellac-count", n, H_PREFIX, enumerate_dellac, jobs)


def check_pistol_count(n: int, jobs: int = 1) -> Report:
    return _prefix_count("pistol-count", n, G_PREFIX, enumerate_pistols, jobs)


def check_tableau_count(n: int, jobs: int = 1) -> Report:
    with timed() as clock:
        actual = len(enumerate_tableaux(n, jobs=jobs))
    return _report("tableau-count", n, tableau_count(n), actual, [], clock)


def check_spdc_count(n: int, jobs: int = 1) -> Report:
    """Three independent values of |SpDC_2n|: enumeration, weighted tableaux, recurrence."""
    with timed() as clock:
        direct = len(enumerate_spdc(n, jobs=jobs))
        weighted = sum(2 ** fr(T) for T in enumerate_tableaux(n, jobs=jobs))
        expected = r_value(n)
    w = [] if direct == weighted == expected else [f"direct={direct}", f"weighted={weighted}"]
    return _report("spdc-count", n, expected, direct, w, clock, weighted_sum=weighted)


def check_eq1(n: int, jobs: int = 1) -> Report:
    return verify_eq1(n, jobs=jobs)


def check_roundtrip(n: int, jobs: int = 1) -> Report:
    """phi(Phi(f)) = f for all f, Phi(phi(T)) = T on the image, letters match types."""
    with timed() as clock:
        bad = []
        pistols = enumerate_pistols(n, jobs=jobs)
        for f in pistols:
            R = build_Phi(f)
            if phi(R.tableau) != f:
                bad.append(f.encode())
                continue
            L = pistol_labels(R.tableau)
            if any((R.letters[i] == A) != (L.labels[i].type == ALPHA) for i in L.labels):
                bad.append(f"letters/types {f.encode()}")
        for T in enumerate_tableaux(n, jobs=jobs):
            if is_tilde(T) and build_Phi(phi(T)).tableau != T:
                bad.append(T.encode())
    return _report("roundtrip", n, len(pistols), len(pistols) - len(bad), bad, clock)


def check_tilde_image(n: int, jobs: int = 1) -> Report:
    with timed() as clock:
        image = {build_Phi(f).tableau for f in enumerate_pistols(n, jobs=jobs)}
        tilde = {T for T in enumerate_tableaux(n, jobs=jobs) if is_tilde(T)}
        w = sorted(T.encode() for T in image ^ tilde)
    return _report("tilde-image", n, len(image), len(tilde), w, clock)


def check_ngr_ndf(n: int, jobs: int = 1) -> Report:
    """ngr_vec(T) = ndf_vec(phi(T)) and fr + |S| + |C| = ngr for every T."""
    with timed() as clock:
        bad = []
        tabs = enumerate_tableaux(n, jobs=jobs)
        for T in tabs:
            sig = signature(T)
            if ngr_vec(T) != ndf_vec(phi(T)) or fr(T) + len(sig.S_set) + len(sig.C_set) != ngr(T):
                bad.append(T.encode())
    return _report("ngr-ndf", n, len(tabs), len(tabs) - len(bad), bad, clock)


def check_lemmas(n: int, jobs: int = 1) -> Report:
    """Where d_{i,min} sits, and when 2i is a fixed point, read from phi(T)."""
    from .labeling import d_min

    with timed() as clock:
        bad = []
        tabs = enumerate_tableaux(n, jobs=jobs)
        for T in tabs:
            f = phi(T)
            L = pistol_labels(T)
            for i in range(1, n + 1):
                k_min = min(k for k in range(1, 2 * n + 1) if f(k) == 2 * i)
                if T.col_of(d_min(T, i)) != (k_min + 1) // 2:
                    bad.append(f"dmin {T.encode()} i={i}")
                if (f(2 * i) == 2 * i) != L.has_beta0e(i):
                    bad.append(f"fixed {T.encode()} i={i}")
    return _report("lemmas", n, len(tabs), len(tabs) - len({w.split(" i=")[0] for w in bad}), bad, clock)


def check_fiber_sum(n: int, jobs: int = 1) -> Report:
    """The weighted fiber identity for every pistol, and that fibers partition Tab_n."""
    with timed() as clock:
        bad = []
        covered = []
        pistols = enumerate_pistols(n, jobs=jobs)
        for f in pistols:
            members = fiber(f)
            covered.extend(members)
            if sum(2 ** fr(T) for T in members) != 2 ** sum(ndf_vec(f)):
                bad.append(f.encode())
            if any(phi(T) != f for T in members):
                bad.append(f"foreign member in {f.encode()}")
        tabs = enumerate_tableaux(n, jobs=jobs)
        if len(covered) != len(set(covered)) or set(covered) != set(tabs):
            bad.append("fibers do not partition Tab_n")
    return _report("fiber-sum", n, len(tabs), len(covered), bad, clock, pistols=len(pistols))


def check_fiber_oracle(n: int, jobs: int = 1) -> Report:
    """Closure-mode fibers equal the brute-force fibers."""
    with timed() as clock:
        by_f: dict = {}
        for T in enumerate_tableaux(n, jobs=jobs):
            by_f.setdefault(phi(T), []).append(T)
        pistols = enumerate_pistols(n, jobs=jobs)
        bad = [f.encode() for f in pistols if fiber(f) != sorted(by_f.get(f, []))]
    return _report("fiber-oracle", n, len(pistols), len(pistols) - len(bad), bad, clock)


def check_expansion(n: int, jobs: int = 1) -> Report:
    """Partition of SpDC_2n by expansions, round trips, and toggle involutions."""
    with timed() as clock:
        rep = verify_partition(n, jobs=jobs)
        bad = list(rep.witnesses) if not rep.passed else []
        for T in enumerate_tableaux(n, jobs=jobs):
            free = [p for p in range(1, 2 * n + 1) if T.is_free(p)]
            for ch in all_choices(T):
                S = expand(T, ch)
                if collapse(S) != (T, ch):
                    bad.append(f"roundtrip {S.encode()}")
                for p in free:
                    if toggle(toggle(S, p), p) != S:
                        bad.append(f"involution {S.encode()} row {p}")
                for p, q in combinations(free, 2):
                    if toggle(toggle(S, p), q) != toggle(toggle(S, q), p):
                        bad.append(f"commute {S.encode()} rows {p},{q}")
    return _report("expansion", n, rep.expected, rep.actual, bad, clock, **rep.details)


def check_golden(n: int = 0, jobs: int = 1) -> Report:
    return golden_report()


CHECKS: dict[str, Callable[..., Report]] = {
    "dellac-count": check_dellac_count,
    "spdc-count": check_spdc_count,
    "tableau-count": check_tableau_count,
    "pistol-count": check_pistol_count,
    "eq1": check_eq1,
    "roundtrip": check_roundtrip,
    "tilde-image": check_tilde_image,
    "ngr-ndf": check_ngr_ndf,
    "lemmas": check_lemmas,
    "fiber-sum": check_fiber_sum,
    "fiber-oracle": check_fiber_oracle,
    "expansion": check_expansion,
    "golden": check_golden,
}


def run_checks(name: str, n: int, jobs: int = 1) -> list[Report]:
    """Run one named check, or every check when ``name`` is ``all``."""
    if name == "all":
        return [fn(n, jobs=jobs) for fn in CHECKS.values()]
    if name not in CHECKS:
        raise KeyError(name)
    return [CHECKS[name](n, jobs=jobs)]
