"""Command-line front end.

Subcommands: gen, product, aci, greedy, vertex-color, compose, hypercube,
verify, scan.  Exit codes: 0 success, 1 verification failure (witness
printed), 2 usage or input error, 3 search budget exhausted.

Any argument of the form @file pulls extra arguments from that file, one
per line, where "key=value" means "--key=value" and '#' starts a comment.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional

from . import corpus, io
from .colouring import EdgeColouring, check_acyclic, colours_used
from .compose import ComposeInput, compose_or_solve
from .graphs import Graph, complete, cycle, grid, hypercube, path
from .solver import AciResult, SearchBudget, exact_aci, greedy_acyclic, lower_bound
from .vertex_colouring import brooks_colouring

OK, VERIFY_FAILED, USAGE, BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def convert_arg_line_to_args(self, line: str) -> list[str]:
        text = line.split("#", 1)[0].strip()
        if not text:
            return []
        if not text.startswith("-") and "=" in text:
            return ["--" + text]
        return [text]


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget_nodes, max_time=args.budget_secs)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=100_000_000, metavar="N")
    p.add_argument("--budget-secs", type=float, default=60.0, metavar="S")


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")


def _load(path_arg: str, fmt: str) -> Graph:
    return io.load_graph(path_arg, fmt)


def _print_colouring(x: EdgeColouring) -> None:
    print(json.dumps(x.to_json_dict(), indent=2))


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_gen(args) -> int:
    makers = {
        "path": (path, 1),
        "cycle": (cycle, 1),
        "complete": (complete, 1),
        "grid": (grid, 2),
        "hypercube": (hypercube, 1),
    }
    maker, arity = makers[args.family]
    if len(args.params) != arity:
        print(f"family {args.family} takes {arity} parameter(s)", file=sys.stderr)
        return USAGE
    g = maker(*args.params)
    sys.stdout.write(io.format_edge_list(g))
    return OK


def _cmd_product(args) -> int:
    from .graphs import cartesian_product

    g = _load(args.g, args.format)
    h = _load(args.h, args.format)
    product, _ = cartesian_product(g, h)
    sys.stdout.write(io.format_edge_list(product))
    return OK


def _report_exhausted(result: AciResult) -> int:
    print(
        json.dumps(
            {
                "exhausted": True,
                "lower": result.lower,
                "upper": result.upper,
                "nodes": result.nodes,
                "time_secs": round(result.seconds, 3),
            }
        )
    )
    print("search budget exhausted", file=sys.stderr)
    return BUDGET


def _cmd_aci(args) -> int:
    g = _load(args.graph, args.format)
    if args.lower_only:
        print(lower_bound(g))
        return OK
    if args.greedy:
        x = greedy_acyclic(g, args.seed)
        _print_colouring(x)
        return OK
    result = exact_aci(g, _budget(args))
    if result.exhausted:
        return _report_exhausted(result)
    print(
        json.dumps(
            {
                "aci": result.aci,
                "colouring": result.witness.to_json_dict(),
                "nodes": result.nodes,
                "time_secs": round(result.seconds, 3),
            },
            indent=2,
        )
    )
    return OK


def _cmd_greedy(args) -> int:
    g = _load(args.graph, args.format)
    _print_colouring(greedy_acyclic(g, args.seed))
    return OK


def _cmd_vertex_color(args) -> int:
    g = _load(args.graph, args.format)
    y = brooks_colouring(g)
    print(json.dumps({str(v): c for v, c in enumerate(y.colours)}))
    return OK


def _factor_colouring(
    graph: Graph, colouring_path: Optional[str], solve: bool, budget: SearchBudget
) -> EdgeColouring:
    if colouring_path is not None:
        x = io.read_colouring(colouring_path)
        if x.graph != graph:
            raise ValueError(f"colouring in {colouring_path} is for a different graph")
        return x
    if not solve:
        raise ValueError("factor colourings missing; pass --xg/--xh or --solve-factors")
    result = exact_aci(graph, budget)
    if result.witness is None:
        raise _Exhausted(result)
    return result.witness


class _Exhausted(Exception):
    def __init__(self, result: AciResult):
        self.result = result


def _cmd_compose(args) -> int:
    g = _load(args.g, args.format)
    h = _load(args.h, args.format)
    budget = _budget(args)
    try:
        xg = _factor_colouring(g, args.xg, args.solve_factors, budget)
        xh = _factor_colouring(h, args.xh, args.solve_factors, budget)
    except _Exhausted as exc:
        return _report_exhausted(exc.result)
    product, x = compose_or_solve(ComposeInput(g, xg, h, xh), budget)
    if args.out_graph:
        io.write_edge_list(product, args.out_graph)
    _print_colouring(x)
    return OK


def _cmd_hypercube(args) -> int:
    from .compose import hypercube_colouring

    cube, x = hypercube_colouring(args.d)
    if args.out_graph:
        io.write_edge_list(cube, args.out_graph)
    _print_colouring(x)
    return OK


def _cmd_verify(args) -> int:
    x = io.read_colouring(args.colouring)
    if args.graph is not None:
        g = _load(args.graph, args.format)
        if g != x.graph:
            print("graph file does not match the colouring's graph", file=sys.stderr)
            return USAGE
    violation = check_acyclic(x)
    if violation is not None:
        print(json.dumps(violation.to_json_dict()))
        return VERIFY_FAILED
    print(f"ok: {colours_used(x)} colours, acyclic")
    return OK


def _cmd_scan(args) -> int:
    if (args.max_n is None) == (args.infile is None):
        print("scan needs exactly one of --max-n or --in", file=sys.stderr)
        return USAGE
    if args.max_n is not None:
        graphs = [g for g in corpus.connected_graphs_up_to(args.max_n) if g.n >= 1]
    else:
        fmt = args.format
        if fmt == "graph6":
            graphs = io.read_graph6(args.infile)
        else:
            graphs = [io.read_edge_list(args.infile)]
    budget = _budget(args)
    writer = csv.writer(sys.stdout)
    writer.writerow(["n", "m", "delta", "aci", "excess", "nodes", "time_ms"])
    worst = 0
    for g in graphs:
        result = exact_aci(g, budget)
        if result.exhausted:
            print(
                f"budget exhausted on a graph with n={g.n} m={g.m} "
                f"(bounds [{result.lower}, {result.upper}])",
                file=sys.stderr,
            )
            return BUDGET
        excess = result.aci - g.max_degree
        worst = max(worst, excess)
        writer.writerow(
            [g.n, g.m, g.max_degree, result.aci, excess, result.nodes,
             round(result.seconds * 1000, 1)]
        )
    print(f"scanned {len(graphs)} graphs, max excess over max degree: {worst}",
          file=sys.stderr)
    return OK


# ---------------------------------------------------------------------------
# Parser


def _build_parser() -> _Parser:
    parser = _Parser(prog="boxcolour", fromfile_prefix_chars="@")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("family", choices=["path", "cycle", "complete", "grid", "hypercube"])
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("product", help="cartesian product of two graphs")
    p.add_argument("--g", required=True, metavar="FILE")
    p.add_argument("--h", required=True, metavar="FILE")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("aci", help="exact acyclic chromatic index")
    p.add_argument("graph", metavar="FILE")
    _add_format_flag(p)
    _add_budget_flags(p)
    p.add_argument("--lower-only", action="store_true")
    p.add_argument("--greedy", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_aci)

    p = sub.add_parser("greedy", help="first-fit acyclic colouring")
    p.add_argument("graph", metavar="FILE")
    _add_format_flag(p)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("vertex-color", help="proper vertex colouring within the degree bound")
    p.add_argument("graph", metavar="FILE")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_vertex_color)

    p = sub.add_parser("compose", help="colour a product from factor colourings")
    p.add_argument("--g", required=True, metavar="FILE")
    p.add_argument("--h", required=True, metavar="FILE")
    p.add_argument("--xg", metavar="JSON")
    p.add_argument("--xh", metavar="JSON")
    p.add_argument("--solve-factors", action="store_true")
    p.add_argument("--out-graph", metavar="FILE")
    _add_format_flag(p)
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("hypercube", help="colour the d-cube with d+1 colours")
    p.add_argument("d", type=int)
    p.add_argument("--out-graph", metavar="FILE")
    p.set_defaults(func=_cmd_hypercube)

    p = sub.add_parser("verify", help="check a colouring JSON file")
    p.add_argument("colouring", metavar="JSON")
    p.add_argument("--graph", metavar="FILE")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="exact solve over a corpus, CSV per graph")
    p.add_argument("--max-n", type=int, metavar="N",
                   help="all connected graphs with up to N vertices")
    p.add_argument("--in", dest="infile", metavar="FILE")
    _add_format_flag(p)
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_scan)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code in (0, None) else USAGE
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def entry() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    entry()
