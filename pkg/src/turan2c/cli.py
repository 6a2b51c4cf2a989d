"""Command-line interface: ``turan2c <command> ...``.

Graph arguments are file paths (text format, or JSON as written by
``--json``), ``-`` for stdin, or ``builtin:NAME``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from typing import Optional, Sequence

from . import acceptance
from .builtins import NAMES, builtin, builtin_text
from .classify import HomWitness, NonColorabilityClaim, OddCycleWitness, classify
from .extremal import MonotonicityError, extremal_number, extremal_table
from .fileio import from_dict, parse, serialize, to_dict
from .hom import blow_up, iter_homs, product
from .model import ColoredGraph, Graph, GraphError, MixedGraph
from .nonuniform import apex_lift, subdivide_2edges, suspend, vertex_link
from .optimize import density_polynomial, maximize_simplex

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def load_graph(ref: str) -> Graph:
    if ref.startswith("builtin:"):
        name = ref[len("builtin:"):]
        if name not in NAMES:
            raise InputError(f"unknown builtin {name!r}; known: {', '.join(NAMES)}")
        return builtin(name)
    try:
        text = sys.stdin.read() if ref == "-" else open(ref, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"{ref}: {exc.strerror or exc}") from None
    try:
        if text.lstrip().startswith("{"):
            return from_dict(json.loads(text))
        return parse(text)
    except (GraphError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"{ref}: {exc}") from None


def _need(g: Graph, kind: type, ref: str) -> Graph:
    if not isinstance(g, kind):
        what = "a 2-colored graph" if kind is ColoredGraph else "a {2,3}-graph"
        raise InputError(f"{ref}: expected {what}")
    return g


def _emit_graph(g: Graph, as_json: bool) -> None:
    if as_json:
        print(json.dumps(to_dict(g)))
    else:
        sys.stdout.write(serialize(g))


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _certificate_dict(cert) -> dict:
    if isinstance(cert, OddCycleWitness):
        return {"kind": "odd_cycle", "color": cert.color, "cycle": list(cert.cycle)}
    if isinstance(cert, HomWitness):
        return {"kind": "hom", "target": cert.target, "images": list(cert.assignment.images)}
    return {"kind": "no_hom", "target": cert.target, "exhausted": cert.exhausted}


def _certificate_text(cert) -> str:
    if isinstance(cert, OddCycleWitness):
        return f"{cert.color} odd cycle: {' '.join(map(str, cert.cycle))}"
    if isinstance(cert, HomWitness):
        pairs = ", ".join(f"{v}->{t}" for v, t in cert.assignment.as_dict().items())
        return f"hom into {cert.target}: {pairs}"
    assert isinstance(cert, NonColorabilityClaim)
    return f"no hom into {cert.target} (exhaustive search)"


def cmd_classify(args) -> int:
    if (args.file is None) == (args.builtin is None):
        raise UsageError("give exactly one of FILE or --builtin NAME")
    ref = args.file if args.file is not None else f"builtin:{args.builtin}"
    H = _need(load_graph(ref), ColoredGraph, ref)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = classify(H, allow_improper=args.allow_improper)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if args.json:
        print(json.dumps({
            "pi": str(result.density),
            "exact": result.density.exact,
            "lower_bound": str(result.value),
            "certificate": _certificate_dict(result.certificate),
        }))
    else:
        print(f"pi = {result.density}" if result.density.exact else f"pi {result.density}")
        print(_certificate_text(result.certificate))
    return EXIT_OK


def cmd_hom(args) -> int:
    G, H = load_graph(args.source), load_graph(args.target)
    homs = []
    try:
        for a in iter_homs(G, H):
            homs.append(a)
            if not args.all:
                break
    except GraphError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(json.dumps({"count": len(homs), "homs": [list(a.images) for a in homs]}))
    elif not homs:
        print("no homomorphism")
    else:
        for a in homs:
            print(" ".join(f"{v}->{t}" for v, t in a.as_dict().items()))
        if args.all:
            print(f"{len(homs)} homomorphism(s)")
    return EXIT_OK if homs else EXIT_NEGATIVE


def _result_dict(r) -> dict:
    return {
        "n": r.n,
        "ex": r.value,
        "density": None if r.density is None else str(r.density),
        "complete": r.complete,
        "nodes": r.node_count,
        "mode": r.mode,
        "witness": None if r.witness is None else to_dict(r.witness),
    }


def cmd_extremal(args) -> int:
    family = [_need(load_graph(ref), ColoredGraph, ref) for ref in args.family]
    names = [ref.removeprefix("builtin:") for ref in args.family]
    mode = {"bnb": "branch_and_bound", "exhaustive": "exhaustive"}[args.mode]
    opts = dict(names=names, timeout=args.timeout, threads=args.threads)
    if (args.n is None) == (args.table is None):
        raise UsageError("give exactly one of --n or --table a..b")
    monotone_error = None
    if args.table is not None:
        try:
            results = extremal_table(family, args.table, mode, **opts)
        except MonotonicityError as exc:
            monotone_error = str(exc)
            results = [extremal_number(family, n, mode, **opts) for n in args.table]
    else:
        results = [extremal_number(family, args.n, mode, **opts)]

    if args.json:
        out = [_result_dict(r) for r in results]
        print(json.dumps(out[0] if args.n is not None else out))
    elif args.n is not None:
        r = results[0]
        print(f"ex = {r.value}" + ("" if r.complete else " (lower bound, timed out)"))
        if args.witness and r.witness is not None:
            sys.stdout.write(serialize(r.witness))
    else:
        print(f"{'n':>3} {'ex':>6} {'pi_n':>8}")
        for r in results:
            flag = "" if r.complete else "  timed out"
            print(f"{r.n:>3} {r.value:>6} {str(r.density or '-'):>8}{flag}")
    if monotone_error:
        print(f"error: {monotone_error}", file=sys.stderr)
        return EXIT_NEGATIVE
    if not all(r.complete for r in results):
        print("error: search timed out; values are lower bounds", file=sys.stderr)
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_lagrangian(args) -> int:
    if args.tol <= 0 or args.starts < 0:
        raise UsageError("--tol must be positive and --starts non-negative")
    p = density_polynomial(load_graph(args.pattern))
    res = maximize_simplex(p, starts=args.starts, tol=args.tol)
    out = {
        "weights": [float(w) for w in res.weights],
        "value": res.value,
        "residual": res.residual,
        "starts_used": res.starts_used,
    }
    if args.json:
        print(json.dumps(out))
    else:
        print(f"value = {res.value:.15g}")
        print("weights = " + " ".join(f"{w:.12g}" for w in res.weights))
        print(f"residual = {res.residual:.3g} ({res.starts_used} starts)")
    return EXIT_OK


def cmd_blowup(args) -> int:
    _emit_graph(blow_up(load_graph(args.pattern), args.sizes), args.json)
    return EXIT_OK


def cmd_product(args) -> int:
    _emit_graph(product(load_graph(args.left), load_graph(args.right)), args.json)
    return EXIT_OK


def cmd_apex(args) -> int:
    _emit_graph(apex_lift(_need(load_graph(args.file), ColoredGraph, args.file)), args.json)
    return EXIT_OK


def cmd_link(args) -> int:
    _emit_graph(vertex_link(_need(load_graph(args.file), MixedGraph, args.file), args.vertex), args.json)
    return EXIT_OK


def cmd_suspend(args) -> int:
    g = load_graph(args.file)
    if not isinstance(g, (ColoredGraph, MixedGraph)):
        raise InputError(f"{args.file}: cannot suspend a pattern")
    _emit_graph(suspend(g), args.json)
    return EXIT_OK


def cmd_subdivide(args) -> int:
    _emit_graph(subdivide_2edges(_need(load_graph(args.file), MixedGraph, args.file)), args.json)
    return EXIT_OK


def cmd_builtin(args) -> int:
    if args.list:
        for name in NAMES:
            print(name)
        return EXIT_OK
    if args.dump not in NAMES:
        raise InputError(f"unknown builtin {args.dump!r}; known: {', '.join(NAMES)}")
    if args.json:
        print(json.dumps(to_dict(builtin(args.dump))))
    else:
        sys.stdout.write(builtin_text(args.dump))
    return EXIT_OK


def cmd_verify(args) -> int:
    rows = acceptance.run_all()
    if args.json:
        print(json.dumps([
            {"criterion": r.criterion, "name": r.name, "passed": r.passed, "detail": r.detail} for r in rows
        ]))
    else:
        for r in rows:
            print(r.line())
        for line in acceptance.notes():
            print(line)
        failed = sum(not r.passed for r in rows)
        print(f"{len(rows) - failed}/{len(rows)} rows passed")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_NEGATIVE


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="turan2c", description="Turan densities of 2-colored graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="density class with certificate")
    p.add_argument("file", nargs="?")
    p.add_argument("--builtin", metavar="NAME")
    p.add_argument("--allow-improper", action="store_true",
                   help="classify single-color inputs anyway (outside the classification's hypotheses)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("hom", parents=[common], help="homomorphism search G -> H")
    p.add_argument("source", metavar="G")
    p.add_argument("target", metavar="H")
    p.add_argument("--all", action="store_true", help="list every homomorphism")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("extremal", parents=[common], help="exact ex(F, n)")
    p.add_argument("--family", nargs="+", required=True, metavar="GRAPH")
    p.add_argument("--n", type=int)
    p.add_argument("--table", type=_parse_range, metavar="A..B")
    p.add_argument("--mode", choices=("bnb", "exhaustive"), default="bnb")
    p.add_argument("--timeout", type=float, help="seconds per n (branch-and-bound only)")
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("TURAN2C_THREADS", "1")),
                   help="worker processes (default: $TURAN2C_THREADS or 1)")
    p.add_argument("--witness", action="store_true", help="also print an extremal graph")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("lagrangian", parents=[common], help="maximize blow-up density of a pattern")
    p.add_argument("pattern")
    p.add_argument("--starts", type=int, default=16, help="interior starting points")
    p.add_argument("--tol", type=float, default=1e-11)
    p.set_defaults(func=cmd_lagrangian)

    p = sub.add_parser("blowup", parents=[common], help="blow up a pattern")
    p.add_argument("pattern")
    p.add_argument("--sizes", type=_parse_sizes, required=True, metavar="S1,S2,...")
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("product", parents=[common], help="product of two patterns")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_product)

    for name, func, helptext in (
        ("apex", cmd_apex, "apex lift of a 2-colored graph"),
        ("suspend", cmd_suspend, "add one new vertex to every edge"),
        ("subdivide", cmd_subdivide, "subdivide every 2-edge"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("link", parents=[common], help="2-colored link of a vertex")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("builtin", parents=[common], help="named graphs")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--dump", metavar="NAME")
    p.set_defaults(func=cmd_builtin)

    p = sub.add_parser("verify-paper", parents=[common], help="run the reproduction table")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
