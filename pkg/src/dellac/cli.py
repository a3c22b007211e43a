"""Command-line front end.

Exit codes: 0 on success or passing checks, 1 when a verification fails,
2 on usage or validation errors.  Objects are given by their canonical
encoding (``T n=2 cols=1,1,2,2``), as JSON, or one per line on stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from . import __version__
from .core import (
    SurjectivePistol,
    Tableau,
    decode,
    doubled_fixed_points,
    enumerate_dellac,
    enumerate_pistols,
    enumerate_spdc,
    enumerate_tableaux,
    fr,
    fr_vec,
    from_json,
    ndf,
    ndf_vec,
    rho,
    to_json,
)
from .errors import DellacError
from .fiber import fiber, is_tilde, mute, signature, switch
from .insertion import build_Phi
from .labeling import ALPHA, BETA, ngr, ngr_vec, phi, pistol_labels
from .render import render
from .sequences import G_PREFIX, H_PREFIX, compare_bfile, r_seq, read_bfile
from .tpath import PartialTableau, pi, t_path
from .verify import CHECKS, run_checks

ENUMERATORS = {
    "dellac": enumerate_dellac,
    "spdc": enumerate_spdc,
    "tableau": enumerate_tableaux,
    "pistol": enumerate_pistols,
}


class UsageError(Exception):
    pass


# input helpers ------------------------------------------------------------


def parse_object(text: str):
    text = text.strip()
    if text.startswith("{"):
        return from_json(text)
    return decode(text)


def parse_partial(text: str) -> PartialTableau:
    """Parse ``J n=.. j=.. cols=..`` where ``.`` or ``0`` marks an empty row."""
    parts = text.split()
    if len(parts) != 4 or parts[0] != "J":
        raise UsageError(f"cannot parse partial tableau {text!r}")
    try:
        n = int(parts[1].removeprefix("n="))
        j = int(parts[2].removeprefix("j="))
        cols = [0 if v in (".", "0") else int(v) for v in parts[3].removeprefix("cols=").split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse partial tableau {text!r}") from exc
    return PartialTableau(n, j, tuple(cols))


def _read_inputs(args, flag: str | None = None) -> list:
    texts = []
    if flag and getattr(args, flag, None):
        texts.append(getattr(args, flag))
    if getattr(args, "encoding", None):
        texts.append(args.encoding)
    if not texts:
        if sys.stdin is None or sys.stdin.isatty():
            raise UsageError("no object given (pass an encoding or pipe one per line on stdin)")
        texts = [line for line in sys.stdin.read().splitlines() if line.strip()]
    return texts


def _objects(args, kind: type, flag: str) -> list:
    out = []
    for text in _read_inputs(args, flag):
        obj = parse_object(text)
        if not isinstance(obj, kind):
            raise UsageError(f"expected a {kind.__name__}, got {type(obj).__name__}")
        out.append(obj)
    return out


# output helpers -----------------------------------------------------------


def _emit(args, text_lines: Iterable[str], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _labels_json(T: Tableau) -> dict:
    L = pistol_labels(T)
    rows = []
    for i in sorted(L.labels):
        rows.append({"row": i, "column": T.col_of(i), **L.labels[i].to_json(), "rule": L.trace[i], "parity_rule": L.parity_trace[i]})
    return {"tableau": T.encode(), "labels": rows}


# commands -----------------------------------------------------------------


def cmd_enumerate(args) -> int:
    objs = ENUMERATORS[args.object](args.n, jobs=args.jobs)
    if args.limit is not None:
        objs = objs[: args.limit]
    _emit(args, (o.encode() for o in objs), [to_json(o) for o in objs])
    return 0


def cmd_count(args) -> int:
    count = len(ENUMERATORS[args.object](args.n, jobs=args.jobs))
    _emit(args, [str(count)], {"object": args.object, "n": args.n, "count": count})
    return 0


def cmd_stats(args) -> int:
    rows = []
    for text in _read_inputs(args):
        obj = parse_object(text)
        if isinstance(obj, Tableau):
            rows.append(
                {
                    "object": obj.encode(),
                    "fr": fr(obj),
                    "fr_vec": list(fr_vec(obj)),
                    "ngr": ngr(obj),
                    "ngr_vec": list(ngr_vec(obj)),
                    "phi": phi(obj).encode(),
                    "tilde": is_tilde(obj),
                    **signature(obj).to_json(),
                }
            )
        elif isinstance(obj, SurjectivePistol):
            rows.append(
                {
                    "object": obj.encode(),
                    "ndf": ndf(obj),
                    "ndf_vec": list(ndf_vec(obj)),
                    "doubled_fixed_points": sorted(doubled_fixed_points(obj)),
                }
            )
        else:
            raise UsageError("stats accepts tableaux and pistols")
    lines = [" ".join(f"{k}={v}" for k, v in r.items()) for r in rows]
    _emit(args, lines, rows)
    return 0


def cmd_sequence(args) -> int:
    name, k = args.name, args.terms
    if name == "r":
        values = r_seq(k - 1)
    else:
        prefix = H_PREFIX if name == "h" else G_PREFIX
        enum = enumerate_dellac if name == "h" else enumerate_pistols
        values = [prefix[0]] + [len(enum(m, jobs=args.jobs)) for m in range(1, k)]
    status = 0
    payload: dict = {"name": name, "values": [str(v) if v >= 2**53 else v for v in values]}
    lines = [f"{i} {v}" for i, v in enumerate(values)]
    if args.bfile:
        diff = compare_bfile(values, read_bfile(args.bfile), args.offset)
        payload["bfile_mismatches"] = [list(d) for d in diff]
        lines.append(f"# b-file: {'match' if not diff else f'{len(diff)} mismatches'}")
        lines.extend(f"# index {i}: ours {a}, b-file {b}" for i, a, b in diff)
        status = 1 if diff else 0
    _emit(args, lines, payload)
    return status


def cmd_map(args) -> int:
    if args.direction == "phi":
        tabs = _objects(args, Tableau, "tableau")
        _emit(args, (phi(T).encode() for T in tabs), [to_json(phi(T)) for T in tabs])
        return 0
    pistols = _objects(args, SurjectivePistol, "pistol")
    if args.direction == "Phi":
        results = [build_Phi(f) for f in pistols]
        lines, payload = [], []
        for f, R in zip(pistols, results):
            T = R.tableau
            letters = "".join(R.letters[rho(T.n, p)] for p in range(1, 2 * T.n + 1))
            lines.append(T.encode())
            if args.trace:
                lines.append(f"  letters by physical row: {letters}")
                for j in sorted(R.stage_rules):
                    o, e = R.insertion_rules[j]
                    lines.append(f"  j={j}: {R.stage_rules[j]}  odd {o}  even {e}")
            payload.append(
                {
                    "pistol": f.encode(),
                    "tableau": to_json(T),
                    "letters": {str(i): R.letters[i] for i in sorted(R.letters)},
                    "stage_rules": {str(j): R.stage_rules[j] for j in sorted(R.stage_rules)},
                    "insertion_rules": {str(j): list(R.insertion_rules[j]) for j in sorted(R.insertion_rules)},
                }
            )
        _emit(args, lines, payload)
        return 0
    lines, payload = [], []
    for f in pistols:
        members = fiber(f, args.mode)
        total = sum(2 ** fr(T) for T in members)
        lines.extend(f"{T.encode()}  fr={fr(T)}" for T in members)
        lines.append(f"# sum 2^fr = {total}, 2^ndf = {2 ** ndf(f)}")
        payload.append(
            {
                "pistol": f.encode(),
                "fiber": [{"tableau": T.encode(), "fr": fr(T)} for T in members],
                "weighted_sum": total,
                "expected": 2 ** ndf(f),
            }
        )
    _emit(args, lines, payload)
    return 0


def cmd_labels(args) -> int:
    tabs = _objects(args, Tableau, "tableau")
    lines = []
    for T in tabs:
        L = pistol_labels(T)
        lines.append(render(T, "text", labels=L.labels))
        lines.append("row  col  label  type-rule    parity-rule")
        for i in sorted(L.labels):
            lines.append(f"{i:>3}  {T.col_of(i):>3}  {str(L.labels[i]):<5}  {L.trace[i]:<11}  {L.parity_trace[i]}")
    _emit(args, lines, [_labels_json(T) for T in tabs])
    return 0


def cmd_tpath(args) -> int:
    text = args.tableau or args.encoding
    if text is None:
        raise UsageError("tpath needs --tableau")
    if text.strip().startswith("J"):
        T = parse_partial(text)
    else:
        obj = parse_object(text)
        if not isinstance(obj, Tableau):
            raise UsageError("tpath needs a tableau or a J-encoded partial tableau")
        T = PartialTableau.from_tableau(obj)
    if args.i is None:
        table = pi(T, args.j)
        _emit(args, (f"{i} -> {a}" for i, a in table.items()), {"j": args.j, "pi": {str(k): v for k, v in table.items()}})
        return 0
    path = t_path(T, args.j, args.i)
    _emit(
        args,
        [f"steps {' '.join(map(str, path.steps))}", f"arrival {path.arrival}"],
        {"j": args.j, "i": args.i, "steps": list(path.steps), "arrival": path.arrival},
    )
    return 0


def _parse_mu(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad mu vector {text!r}") from exc


def cmd_switch(args) -> int:
    tabs = _objects(args, Tableau, "tableau")
    out = [switch(T, _parse_mu(args.mu)) for T in tabs]
    _emit(args, (U.encode() for U in out), [to_json(U) for U in out])
    return 0


def cmd_mute(args) -> int:
    gamma = {"alpha": ALPHA, "beta": BETA, ALPHA: ALPHA, BETA: BETA}[args.gamma]
    tabs = _objects(args, Tableau, "tableau")
    out = [mute(T, args.j0, gamma) for T in tabs]
    _emit(args, (U.encode() for U in out), [to_json(U) for U in out])
    return 0


def cmd_render(args) -> int:
    fmt = "svg" if args.format == "svg" else "text"
    for text in _read_inputs(args):
        obj = parse_object(text)
        labels = pistol_labels(obj).labels if args.labels and isinstance(obj, Tableau) else None
        sys.stdout.write(render(obj, fmt, labels=labels))
        if fmt == "text":
            sys.stdout.write("\n")
    return 0


def cmd_verify(args) -> int:
    reports = run_checks(args.check, args.n, jobs=args.jobs)
    dicts = [r.to_dict(timing=args.timing) for r in reports]
    lines = []
    for r in reports:
        lines.append(f"{r.check:<14} n={r.n:<3} {'PASS' if r.passed else 'FAIL'}  expected={r.expected} actual={r.actual}")
        lines.extend(f"    witness: {w}" for w in r.witnesses[:5] if not r.passed)
        if r.details.get("errata"):
            lines.append(f"    reproduced with documented errata: {', '.join(r.details['errata'])}")
    _emit(args, lines, {"version": __version__, "reports": dicts})
    return 0 if all(r.passed for r in reports) else 1


# parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "svg"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")

    parser = argparse.ArgumentParser(prog="dellac", description="Dellac configurations, tableaux and surjective pistols.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def obj_parser(name, help_, **kw):
        p = sub.add_parser(name, parents=[common], help=help_, **kw)
        p.add_argument("encoding", nargs="?", help="object encoding (default: read stdin)")
        return p

    p = sub.add_parser("enumerate", parents=[common], help="list every object of a family")
    p.add_argument("--object", choices=tuple(ENUMERATORS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count a family by enumeration")
    p.add_argument("--object", choices=tuple(ENUMERATORS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = obj_parser("stats", "statistics of tableaux or pistols")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sequence", parents=[common], help="print a counting sequence")
    p.add_argument("--name", choices=("r", "h", "g"), default="r")
    p.add_argument("--terms", type=int, default=8)
    p.add_argument("--bfile", help="OEIS b-file to cross-check against")
    p.add_argument("--offset", type=int, default=0, help="b-file index of our first term")
    p.set_defaults(func=cmd_sequence)

    p = obj_parser("map", "apply phi, Phi or list a fiber")
    p.add_argument("direction", choices=("phi", "Phi", "phi-inverse"))
    p.add_argument("--tableau")
    p.add_argument("--pistol")
    p.add_argument("--trace", action="store_true", help="show letters and fired rules (Phi)")
    p.add_argument("--mode", choices=("closure", "brute"), default="closure")
    p.set_defaults(func=cmd_map)

    p = obj_parser("labels", "pistol labels and the rules that produced them")
    p.add_argument("--tableau")
    p.set_defaults(func=cmd_labels)

    p = obj_parser("tpath", "walk a T-path, or print the whole pi_j table")
    p.add_argument("--tableau")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_tpath)

    p = obj_parser("switch", "rebuild a tableau with a prescribed mu vector")
    p.add_argument("--tableau")
    p.add_argument("--mu", required=True, help="comma-separated +1/-1 values")
    p.set_defaults(func=cmd_switch)

    p = obj_parser("mute", "recolor the twin pair of a column and rebuild")
    p.add_argument("--tableau")
    p.add_argument("--j0", type=int, required=True)
    p.add_argument("--gamma", choices=("alpha", "beta", ALPHA, BETA), required=True)
    p.set_defaults(func=cmd_mute)

    p = obj_parser("render", "draw an object as ASCII or SVG")
    p.add_argument("--labels", action="store_true", help="overlay pistol labels on tableaux")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", parents=[common], help="run verification checks")
    p.add_argument("--check", choices=(*CHECKS, "all"), default="all")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--timing", action="store_true", help="report real elapsed_ms instead of 0")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1 and not (args.command == "verify" and args.check == "golden"):
        parser.error("--n must be at least 1")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    if args.format == "svg" and args.command != "render":
        parser.error("--format svg is only available for render")
    try:
        return args.func(args)
    except (DellacError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
