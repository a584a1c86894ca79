"""Command-line front end.

Exit codes: 0 success, 1 unreadable or malformed input, 2 a mathematical
precondition fails (form not negative definite, not rational, invalid m,
weight >= -1 for diagrams, an invalid derivation).
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from .cycle import DEFAULT_COEFF_CAP, CoefficientCapExceeded, NotNegativeDefinite, is_rational
from .graph import GraphShapeError, PlumbingError, PlumbingGraph, parse_plumbing
from .legendrian import NotRealizable
from .mcg.rewrite import DEFAULT_REWRITE_DEPTH
from .mcg.script import ScriptSyntaxError, load_script
from .mcg.words import format_word
from .openbook import (InvalidCycle, NotRational, SupportClass, SupportKind, classify_support,
                       milnor_openbook)
from .report import (TABLE_COLUMNS, PreconditionFailed, build_report, diagram_dict, dumps,
                     format_table, table_row)

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_graph(path: str) -> PlumbingGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}", EXIT_INPUT) from None
    try:
        return parse_plumbing(text)
    except PlumbingError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from None


def _emit(args, payload: dict, table: str | None = None) -> None:
    if args.format == "table":
        sys.stdout.write(table if table is not None else _kv_table(payload))
    else:
        sys.stdout.write(dumps(payload))


def _kv_table(payload: dict) -> str:
    rows = []
    for k in sorted(payload):
        v = payload[k]
        if isinstance(v, (list, tuple)):
            v = ",".join(map(str, v))
        rows.append([k, "-" if v is None else v])
    return format_table(["key", "value"], rows)


# -- commands --------------------------------------------------------------

def cmd_invariants(args) -> int:
    g = _load_graph(args.path)
    try:
        rep = build_report(g, args.coeff_cap)
    except (GraphShapeError, PreconditionFailed) as exc:
        raise CliError(str(exc), EXIT_MATH) from None
    _emit(args, rep.as_dict(), format_table(TABLE_COLUMNS, [table_row(Path(args.path).stem, rep)]))
    for w in rep.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK if rep.negative_definite else EXIT_MATH


def cmd_cycle(args) -> int:
    g = _load_graph(args.path)
    try:
        cert = is_rational(g, args.coeff_cap)
    except (GraphShapeError, NotNegativeDefinite, CoefficientCapExceeded) as exc:
        raise CliError(str(exc), EXIT_MATH) from None
    _emit(args, {"cycle": list(cert.cycle), "z_squared": cert.z_squared,
                 "artin_sum": cert.artin_sum, "rational": cert.rational})
    return EXIT_OK


def _parse_m(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise CliError(f"--m must be a comma-separated list of integers or 'min', got {text!r}",
                       EXIT_INPUT) from None


def cmd_openbook(args) -> int:
    g = _load_graph(args.path)
    try:
        if args.m == "min":
            cert = is_rational(g, args.coeff_cap)
            if not cert.rational:
                raise NotRational(f"not rational (Artin sum {cert.artin_sum}); "
                                  "no minimal Milnor open book")
            m = cert.cycle
        else:
            m = _parse_m(args.m)
            g.require_plumbing_tree()
        ob = milnor_openbook(g, m)
    except InvalidCycle as exc:
        detail = f" (n = {list(exc.n)})" if exc.n else ""
        raise CliError(f"{exc}{detail}", EXIT_MATH) from None
    except (GraphShapeError, NotNegativeDefinite, CoefficientCapExceeded, NotRational) as exc:
        raise CliError(str(exc), EXIT_MATH) from None
    out = ob.as_dict()
    out["class"] = page_class(ob.page_genus)
    _emit(args, out)
    return EXIT_OK


def page_class(genus: int) -> str:
    kind = {0: SupportKind.PLANAR, 1: SupportKind.ELLIPTIC}.get(genus, SupportKind.HIGHER)
    return str(SupportClass(kind, genus))


def cmd_classify(args) -> int:
    g = _load_graph(args.path)
    try:
        sc = classify_support(g, args.coeff_cap)
    except (GraphShapeError, NotNegativeDefinite, CoefficientCapExceeded, NotRational) as exc:
        raise CliError(str(exc), EXIT_MATH) from None
    _emit(args, {"support": str(sc), "genus": sc.genus})
    return EXIT_OK


def cmd_diagram(args) -> int:
    g = _load_graph(args.path)
    try:
        g.require_plumbing_tree()
        d = diagram_dict(g)
    except (GraphShapeError, NotRealizable) as exc:
        raise CliError(str(exc), EXIT_MATH) from None
    if args.format == "table":
        rows = [[c["vertex"], c["weight"], c["tb"], c["rot"], c["cusps_up"], c["cusps_down"]]
                for c in d["components"]]
        table = format_table(["vertex", "weight", "tb", "rot", "cusps_up", "cusps_down"], rows)
        table += f"adjunction: {'ok' if d['adjunction_ok'] else 'FAILED'}\n"
        _emit(args, d, table)
    else:
        _emit(args, d)
    return EXIT_OK


def cmd_mcg_verify(args) -> int:
    try:
        script = load_script(args.script)
    except OSError as exc:
        raise CliError(f"{args.script}: {exc.strerror}", EXIT_INPUT) from None
    except ScriptSyntaxError as exc:
        raise CliError(f"{args.script}: {exc}", EXIT_INPUT) from None
    v = script.verify(args.rewrite_depth)
    payload = {
        "surface": script.surface,
        "steps": len(script.words),
        "start": format_word(script.words[0]),
        "end": format_word(script.words[-1]),
        "valid": v.valid,
        "failing_index": v.failing_index,
        "reason": v.reason or None,
        "moves": [str(m) for m in v.moves],
    }
    _emit(args, payload)
    return EXIT_OK if v.valid else EXIT_MATH


def _batch_one(job: tuple[str, int]) -> tuple[str, dict | None, str | None]:
    path, cap = job
    name = Path(path).name
    try:
        g = parse_plumbing(Path(path).read_text())
        rep = build_report(g, cap)
    except (OSError, PlumbingError, GraphShapeError, PreconditionFailed) as exc:
        return name, None, str(exc)
    return name, rep, None


def cmd_batch(args) -> int:
    d = Path(args.dir)
    if not d.is_dir():
        raise CliError(f"{d}: not a directory", EXIT_INPUT)
    files = sorted((p for p in d.iterdir() if p.suffix == ".plb"), key=lambda p: p.name)
    jobs = [(str(p), args.coeff_cap) for p in files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_one, jobs))
    else:
        results = [_batch_one(j) for j in jobs]
    rows = [(name, rep) for name, rep, err in results if rep is not None]
    errors = [{"file": name, "error": err} for name, rep, err in results if err is not None]
    if args.format == "table":
        out = format_table(TABLE_COLUMNS, [table_row(name, rep) for name, rep in rows])
        sys.stdout.write(out)
        for e in errors:
            print(f"error: {e['file']}: {e['error']}", file=sys.stderr)
    else:
        sys.stdout.write(dumps({"rows": [{"file": n, "report": r.as_dict()} for n, r in rows],
                                "errors": errors}))
    return EXIT_INPUT if errors else EXIT_OK


# -- parser ----------------------------------------------------------------

_DEFAULTS = {"format": "json", "coeff_cap": DEFAULT_COEFF_CAP,
             "rewrite_depth": DEFAULT_REWRITE_DEPTH}


def _common() -> argparse.ArgumentParser:
    # defaults are filled in after parsing so flags work before or after the command
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json",
                     help="JSON output (default)")
    fmt.add_argument("--table", dest="format", action="store_const", const="table",
                     help="plain-text table output")
    p.add_argument("--coeff-cap", type=int, metavar="N",
                   help="abort Laufer's algorithm when a coefficient exceeds N")
    p.add_argument("--rewrite-depth", type=int, metavar="N",
                   help="depth bound for 'search' steps in derivation scripts")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="singlink", parents=[common],
        description="Invariants of links of rational surface singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("invariants", cmd_invariants, "full report for a plumbing file").add_argument("path")
    add("cycle", cmd_cycle, "fundamental cycle and rationality certificate").add_argument("path")
    sp = add("openbook", cmd_openbook, "Milnor open book of a cycle")
    sp.add_argument("path")
    sp.add_argument("--m", default="min", help="comma-separated cycle, or 'min' (default)")
    add("classify", cmd_classify, "planar / elliptic / higher(g)").add_argument("path")
    add("diagram", cmd_diagram, "canonical Legendrian surgery diagram").add_argument("path")
    mcg = sub.add_parser("mcg", help="Dehn-twist derivation scripts")
    msub = mcg.add_subparsers(dest="mcg_command", required=True)
    sp = msub.add_parser("verify", parents=[common], help="check a derivation script")
    sp.add_argument("script")
    sp.set_defaults(func=cmd_mcg_verify)
    sp = add("batch", cmd_batch, "report every .plb file in a directory")
    sp.add_argument("dir")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes (output is identical)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    for k, v in _DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"singlink: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
