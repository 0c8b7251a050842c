"""Command-line front end.

Exit codes: 0 success, 1 identity failure, 2 usage or parse error,
3 disconnected input, 4 input not regular.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .closed_forms import RegularGraphParams, kf_rt_formula
from .errors import Disconnected, GraphError, NotRegular, ParseError, TooSmall
from .graph import Graph, format_edge_list, is_connected, parse_edge_list, parse_family
from .operators import line_graph, r_graph, rt_graph
from .spectra import kirchhoff_via_coefficients, kirchhoff_via_resistance, kirchhoff_via_spectrum
from .verify import SUITES, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DISCONNECTED, EXIT_NOT_REGULAR = 0, 1, 2, 3, 4

METHODS = ("spectrum", "coefficients", "resistance", "closed-form-rt")


def _load(source: str) -> Graph:
    if source == "-":
        return parse_edge_list(sys.stdin.read())
    with open(source, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _inputs(args) -> list[tuple[str, Graph]]:
    graphs = [(" ".join(spec), parse_family(spec)) for spec in args.family or ()]
    sources = args.input or ([] if graphs else ["-"])
    graphs += [(src, _load(src)) for src in sources]
    return graphs


def _fmt(x, as_float: bool) -> str:
    if isinstance(x, float):
        return format(x, ".15g")
    return f"{x} {float(x):.15g}" if as_float else str(x)


def cmd_gen(args) -> int:
    sys.stdout.write(format_edge_list(parse_family([args.family, *args.params])))
    return EXIT_OK


def cmd_derive(args) -> int:
    graphs = _inputs(args)
    if len(graphs) != 1:
        raise ParseError("derive takes exactly one graph")
    (_, g), = graphs
    if args.operator == "line":
        sys.stdout.write(format_edge_list(line_graph(g), ["operator line"]))
    else:
        sys.stdout.write((r_graph if args.operator == "r" else rt_graph)(g).to_edge_list())
    return EXIT_OK


def _kirchhoff(g: Graph, method: str, tol):
    if method == "spectrum":
        return kirchhoff_via_spectrum(g, tol)
    if method == "coefficients":
        return kirchhoff_via_coefficients(g)
    if method == "resistance":
        return kirchhoff_via_resistance(g)
    p = RegularGraphParams.from_graph(g)
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    return kf_rt_formula(p.n, p.r, kirchhoff_via_coefficients(g))


def cmd_kirchhoff(args) -> int:
    for _, g in _inputs(args):
        print(_fmt(_kirchhoff(g, args.method, args.tol), args.float))
    return EXIT_OK


def _verify_one(job):
    graph_id, g, suite, tol = job
    try:
        return graph_id, verify(g, suite, graph_id, tol=tol), None
    except NotRegular as exc:
        return graph_id, None, (EXIT_NOT_REGULAR, str(exc))
    except Disconnected as exc:
        return graph_id, None, (EXIT_DISCONNECTED, str(exc))
    except TooSmall as exc:
        return graph_id, None, (EXIT_USAGE, str(exc))


def cmd_verify(args) -> int:
    jobs = [(gid, g, args.suite, args.tol) for gid, g in _inputs(args)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]

    code, reports = EXIT_OK, []
    for graph_id, report, err in results:
        if err is not None:
            print(f"{graph_id}: {err[1]}", file=sys.stderr)
            code = max(code, err[0])
            continue
        print(report.summary(), file=sys.stderr)
        reports.append(report.to_dict())
        if not report.passed:
            code = max(code, EXIT_FAIL)
    if reports:
        payload = reports[0] if len(jobs) == 1 else reports
        print(json.dumps(payload, indent=2))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtgraph",
        description="Derived graphs R(G) and RT(G), Laplacian polynomials and Kirchhoff indices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p, many=True):
        p.add_argument("input", nargs="*" if many else "?", default=None,
                       help="edge-list file(s); '-' or nothing reads standard input")
        p.add_argument("--family", nargs="+", action="append", metavar="SPEC",
                       help="use a generated graph instead, e.g. --family cycle 5")

    p = sub.add_parser("gen", help="emit a named family as an edge list")
    p.add_argument("family", help="complete | cycle | path | star | empty | complete_bipartite | petersen | hypercube")
    p.add_argument("params", nargs="*", help="integer parameters of the family")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("derive", help="apply an operator and emit the derived graph")
    p.add_argument("operator", choices=("r", "rt", "line"))
    add_inputs(p, many=False)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("kirchhoff", help="Kirchhoff index by a chosen method")
    add_inputs(p)
    p.add_argument("--method", choices=METHODS, default="resistance")
    p.add_argument("--float", action="store_true", help="also print a 15-significant-digit decimal")
    p.add_argument("--tol", type=float, default=None, help="zero-eigenvalue tolerance for --method spectrum")
    p.set_defaults(func=cmd_kirchhoff)

    p = sub.add_parser("verify", help="run identity suites and print a JSON report")
    add_inputs(p)
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--jobs", type=int, default=1, help="verify independent graphs in parallel")
    p.add_argument("--tol", type=float, default=None, help="zero-eigenvalue tolerance for the numeric check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "input", None) is not None and isinstance(args.input, str):
        args.input = [args.input]
    try:
        return args.func(args)
    except (GraphError, TooSmall, OSError) as exc:
        print(f"rtgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotRegular as exc:
        print(f"rtgraph: not regular: {exc}", file=sys.stderr)
        return EXIT_NOT_REGULAR
    except Disconnected as exc:
        print(f"rtgraph: disconnected: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED


if __name__ == "__main__":
    sys.exit(main())
