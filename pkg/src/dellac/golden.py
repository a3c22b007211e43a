"""Replay of the worked examples shipped in ``data/golden.json``.

Each fixture item is compared with what the library computes.  Items that
disagree with the literal source but match a documented erratum count as
reproduced-with-correction; anything else is a failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import SurjectivePistol, Tableau, fr_vec, rho
from .fiber import mute_labeled, signature, switch
from .insertion import build_Phi, insert_at_box
from .labeling import phi, ngr_vec, pistol_labels
from .report import Report, timed
from .tpath import PartialTableau, pi, t_path


@lru_cache(maxsize=1)
def load() -> dict:
    return json.loads(resources.files("dellac").joinpath("data/golden.json").read_text(encoding="utf-8"))


@dataclass
class Item:
    id: str
    path: tuple
    expected: object
    actual: object
    status: str  # "match", "erratum" or "mismatch"
    erratum: dict | None = None


def _get(data, path):
    for key in path:
        data = data[key]
    return data


def _by_phys(n: int, mapping) -> list:
    return [mapping[rho(n, p)] for p in range(1, 2 * n + 1)]


def _computed(g: dict) -> list[tuple[tuple, object]]:
    """(fixture path, computed value) pairs, in a fixed order."""
    out: list[tuple[tuple, object]] = []
    t0 = g["T0"]
    T0 = PartialTableau(t0["n"], t0["j"], tuple(t0["phys_col"]))
    out.append((("T0", "pi"), {str(k): v for k, v in pi(T0, t0["j"]).items()}))
    for start in t0["paths"]:
        out.append((("T0", "paths", start), list(t_path(T0, t0["j"], int(start)).steps)))
    for target in t0["insert"]:
        out.append((("T0", "insert", target), insert_at_box(T0, t0["j"], int(target))[1]))

    t1 = g["T1"]
    n = t1["n"]
    T1 = Tableau(n, tuple(t1["phys_col"]))
    L = pistol_labels(T1)
    out.append((("T1", "fr"), list(fr_vec(T1))))
    out.append((("T1", "ngr"), list(ngr_vec(T1))))
    out.append((("T1", "labels_by_phys"), [str(x) for x in _by_phys(n, L.labels)]))
    for p in t1["trace_by_phys"]:
        out.append((("T1", "trace_by_phys", p), L.trace[rho(n, int(p))]))

    f1 = g["f1"]
    f = SurjectivePistol(f1["n"], tuple(f1["f"]))
    out.append((("f1", "f"), list(phi(T1).f)))
    R = build_Phi(f)
    out.append((("f1", "Phi"), "T1" if R.tableau == T1 else R.tableau.encode()))
    out.append((("f1", "letters_by_phys"), _by_phys(n, R.letters)))
    for j in f1["stage_rules"]:
        out.append((("f1", "stage_rules", j), R.stage_rules[int(j)]))
    for j in f1["insertion_rules"]:
        out.append((("f1", "insertion_rules", j), list(R.insertion_rules[int(j)])))

    fx = g["F"]
    n = fx["n"]
    T = Tableau(n, tuple(fx["phys_col"]))
    sig = signature(T)
    out.append((("F", "f"), list(phi(T).f)))
    out.append((("F", "S"), list(sig.S_set)))
    out.append((("F", "mu"), list(sig.mu)))
    out.append((("F", "C"), list(sig.C_set)))
    out.append((("F", "t"), {str(k): v for k, v in sig.t_map.items()}))
    for key in fx["switch"]:
        mu = tuple(int(x) for x in key.split(","))
        out.append((("F", "switch", key), list(switch(T, mu).phys_col)))
    for gamma, entry in fx["mute"].items():
        M = mute_labeled(T, entry["j0"], gamma)
        out.append(
            (
                ("F", "mute", gamma),
                {"j0": entry["j0"], "phys_col": list(M.base.phys_col), "letters_by_phys": _by_phys(n, M.ins_labels)},
            )
        )
    return out


def _same(path: tuple, a, b) -> bool:
    # the source lists each column's two insertion rules in no fixed order
    if path[:2] == ("f1", "insertion_rules"):
        return sorted(a) == sorted(b)
    return a == b


def replay() -> list[Item]:
    g = load()
    errata = {tuple(e["path"]): e for e in g["errata"]}
    items = []
    for path, actual in _computed(g):
        expected = _get(g, path)
        ident = "/".join(path)
        if _same(path, expected, actual):
            items.append(Item(ident, path, expected, actual, "match"))
            continue
        e = errata.get(path)
        if e is not None and _same(path, e["computed"], actual) and _same(path, e["source"], expected):
            items.append(Item(ident, path, expected, actual, "erratum", e))
        else:
            items.append(Item(ident, path, expected, actual, "mismatch", e))
    return items


def golden_report() -> Report:
    with timed() as clock:
        items = replay()
    bad = [it for it in items if it.status == "mismatch"]
    corrected = [it.erratum["id"] for it in items if it.status == "erratum"]
    return Report(
        check="golden",
        n=0,
        expected=len(items),
        actual=len(items) - len(bad),
        passed=not bad,
        elapsed_ms=clock.ms,
        witnesses=[f"{it.id}: expected {it.expected!r}, got {it.actual!r}" for it in bad],
        details={"items": len(items), "literal_matches": sum(it.status == "match" for it in items), "errata": corrected},
    )
