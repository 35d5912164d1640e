"""Command-line interface.

Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
3 precondition not met (e.g. the instance is not simple and 3-chromatic).
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from collections import Counter

from . import surface
from .alontarsi import count_eulerian_subgraphs
from .config import LIMITS
from .errors import InvalidInput, LimitExceeded, OutOfDomain, ToruschooseError
from .formats import (coloring_from_dict, coloring_to_dict, dumps, graph_from_dict, lists_from_dict,
                      orientation_to_dict, to_dot, torus_to_dict)
from .listcolor import random_list_assignment, verify_coloring
from .structured import TorusContext, run_five_list_coloring
from .torus import TorusParams, build_torus_triangulation, classify

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _torus(args):
    try:
        return build_torus_triangulation(TorusParams(args.r, args.s, args.t))
    except ToruschooseError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc


def _require_three_chromatic(T):
    c = classify(T.params, T)
    if not c.is_simple:
        raise CliError(f"T{tuple(T.params)} is not simple", EXIT_PRECONDITION)
    if not c.is_three_chromatic:
        raise CliError(f"T{tuple(T.params)} is not 3-chromatic: needs s ≡ 0 ≡ r - t (mod 3)",
                       EXIT_PRECONDITION)


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


# ---------------------------------------------------------------- commands

def cmd_generate(args, out):
    T = _torus(args)
    if args.format == "dot":
        out.write(to_dot(T.graph, name=f"T_{args.r}_{args.s}_{args.t}"))
    else:
        out.write(dumps(torus_to_dict(T)) + "\n")
    return EXIT_OK


def cmd_survey(args, out):
    if args.max_n > args.cap:
        raise CliError(f"max_n {args.max_n} exceeds the survey cap {args.cap}")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["r", "s", "t", "vertices", "edges", "has_loops", "has_multi_edges",
                     "is_simple", "is_three_chromatic", "h_cycles"])
    rows = []
    for r in range(1, args.max_n + 1):
        for s in range(1, args.max_n // r + 1):
            for t in range(s):
                T = build_torus_triangulation((r, s, t))
                c = classify(T.params, T)
                cycles = len(TorusContext.build(T).cycles) if c.is_three_chromatic else ""
                flag = "" if c.is_three_chromatic is None else str(c.is_three_chromatic).lower()
                rows.append([r, s, t, T.graph.n, T.graph.edge_count, str(c.has_loops).lower(),
                             str(c.has_multi_edges).lower(), str(c.is_simple).lower(), flag, cycles])
    rows.sort(key=lambda row: row[:3])
    writer.writerows(rows)
    return EXIT_OK


def _parse_k(text):
    text = str(text)
    if text.startswith("k="):
        text = text[2:]
    try:
        return int(text)
    except ValueError:
        raise CliError(f"bad list size {text!r}")


def cmd_color(args, out, err):
    T = _torus(args)
    _require_three_chromatic(T)
    if args.lists:
        L = lists_from_dict(_load_json(args.lists))
    elif args.random_lists is not None:
        k = _parse_k(args.random_lists)
        try:
            L = random_list_assignment(T.graph, k, args.universe, args.seed)
        except ToruschooseError as exc:
            raise CliError(str(exc)) from exc
    else:
        raise CliError("give --lists FILE or --random-lists")
    bad = [v for v in T.graph.vertices() if len(L.get(v, ())) != 5]
    if bad:
        raise CliError(f"lists must all have exactly 5 colours (vertex {bad[0]} does not)")
    run = run_five_list_coloring(T, L, seed=args.seed)
    ok = verify_coloring(T.graph, run.coloring, L)
    out.write(dumps(coloring_to_dict(run.coloring)) + "\n")
    lines = "".join(dumps(event) + "\n" for event in run.trace)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(lines)
    else:
        err.write(lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verify(args, out):
    try:
        g = graph_from_dict(_load_json(args.graph))
        coloring = coloring_from_dict(_load_json(args.coloring))
        L = lists_from_dict(_load_json(args.lists)) if args.lists else None
        ok = verify_coloring(g, coloring, L)
    except InvalidInput as exc:
        raise CliError(str(exc)) from exc
    out.write(("valid" if ok else "invalid") + "\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_at_check(args, out):
    T = _torus(args)
    _require_three_chromatic(T)
    ctx = TorusContext.build(T)
    o = ctx.orientation
    profile = {"I2": Counter(), "I3": Counter()}
    for k, p in enumerate(ctx.G1.origin):
        profile["I2" if p in ctx.part.I2 else "I3"][o.outdegree(k)] += 1
    report = {"params": list(T.params),
              "g1_vertices": ctx.G1.n, "g1_edges": ctx.G1.edge_count,
              "outdeg_profile": {cls: {str(d): c for d, c in sorted(cnt.items())}
                                 for cls, cnt in profile.items()},
              "outdeg_ok": set(profile["I2"]) == {2} and set(profile["I3"]) == {1}}
    code = EXIT_OK
    try:
        count = count_eulerian_subgraphs(o)
        report["eulerian"] = {"even": count.even, "odd": count.odd}
        report["at_condition"] = count.even != count.odd
        if not report["at_condition"]:
            code = EXIT_NEGATIVE
    except LimitExceeded as exc:
        report["eulerian"] = None
        report["at_condition"] = None
        report["notice"] = f"parity skipped: {exc}"
    if args.orientation:
        report["orientation"] = orientation_to_dict(o)
    out.write(dumps(report) + "\n")
    return code


CALCS = {
    "heawood": (surface.heawood, 1),
    "heawood-nonorientable": (surface.heawood_nonorientable, 1),
    "genus-complete": (surface.orientable_genus_complete, 1),
    "nonorientable-genus": (surface.nonorientable_genus_complete, 1),
    "genus-bipartite": (surface.genus_complete_bipartite, 2),
    "multipartite-genus": (surface.multipartite_genus_upper, 2),
    "kierstead": (surface.kierstead_choice_K3r, 1),
    "euler-degree": (surface.euler_degree_bound, 2),
    "euler-cap": (surface.euler_degree_cap, 1),
    "ert": (surface.ert_bipartite_threshold, 1),
    "jump-upper": (surface.jump_upper_bound, 1),
}


def _int_range(text):
    """``7`` or an inclusive range ``1..10``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise CliError(f"expected an integer or a range a..b, got {text!r}")


def cmd_calc(args, out, err):
    if args.name == "density":
        if len(args.values) != 1:
            raise CliError("calc density takes one graph JSON file")
        g = graph_from_dict(_load_json(args.values[0]))
        try:
            out.write(f"{surface.max_subgraph_density(g)}\n")
        except OutOfDomain as exc:
            raise CliError(f"out-of-domain: {exc}") from exc
        return EXIT_OK
    fn, arity = CALCS[args.name]
    if len(args.values) != arity:
        raise CliError(f"calc {args.name} takes {arity} argument(s)")
    grids = [_int_range(v) for v in args.values]
    table = any(len(gr) > 1 for gr in grids)
    writer = csv.writer(out, lineterminator="\n")
    if table:
        writer.writerow([f"arg{i + 1}" for i in range(arity)] + [args.name])
    for combo in itertools.product(*grids):
        try:
            value = fn(*combo)
        except OutOfDomain as exc:
            if table:
                writer.writerow(list(combo) + [""])
                continue
            raise CliError(f"out-of-domain: {exc}") from exc
        note = getattr(value, "note", None)
        if table:
            writer.writerow(list(combo) + [int(value)])
        else:
            out.write(f"{int(value)}\n")
        if note:
            err.write(f"note: {note}\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-vertices", type=int, default=argparse.SUPPRESS,
                        help="vertex cap for exact solvers")
    common.add_argument("--budget-edges", type=int, default=argparse.SUPPRESS,
                        help="edge cap for Eulerian subgraph counting")

    parser = argparse.ArgumentParser(prog="toruschoose", parents=[common],
                                     description="6-regular toroidal triangulations and list colouring")
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p):
        p.add_argument("r", type=int)
        p.add_argument("s", type=int)
        p.add_argument("t", type=int)

    p = sub.add_parser("generate", parents=[common], help="emit T(r,s,t) as JSON or DOT")
    params(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("survey", parents=[common], help="CSV classification of all T(r,s,t) with r*s <= max_n")
    p.add_argument("max_n", type=int)
    p.add_argument("--cap", type=int, default=200)

    p = sub.add_parser("color", parents=[common], help="5-list-colour a simple 3-chromatic T(r,s,t)")
    params(p)
    p.add_argument("--lists", help="list assignment JSON")
    p.add_argument("--random-lists", nargs="?", const="5", default=None, metavar="k=5",
                   help="draw random k-lists (k must be 5)")
    p.add_argument("--universe", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", help="write the JSON-lines trace here instead of stderr")

    p = sub.add_parser("verify", parents=[common], help="check a colouring against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("lists", nargs="?")

    p = sub.add_parser("at-check", parents=[common], help="orientation and parity report for G1")
    params(p)
    p.add_argument("--orientation", action="store_true", help="include the orientation JSON")

    p = sub.add_parser("calc", parents=[common], help="surface and colouring formulas")
    p.add_argument("name", choices=sorted(CALCS) + ["density"])
    p.add_argument("values", nargs="*")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    saved = (LIMITS.max_vertices_exact, LIMITS.max_vertices_isomorphism, LIMITS.max_eulerian_edges)
    if hasattr(args, "max_vertices"):
        LIMITS.max_vertices_exact = LIMITS.max_vertices_isomorphism = args.max_vertices
    if hasattr(args, "budget_edges"):
        LIMITS.max_eulerian_edges = args.budget_edges
    try:
        if args.command == "generate":
            return cmd_generate(args, out)
        if args.command == "survey":
            return cmd_survey(args, out)
        if args.command == "color":
            return cmd_color(args, out, err)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "at-check":
            return cmd_at_check(args, out)
        return cmd_calc(args, out, err)
    except CliError as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except ToruschooseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    finally:
        (LIMITS.max_vertices_exact, LIMITS.max_vertices_isomorphism,
         LIMITS.max_eulerian_edges) = saved


if __name__ == "__main__":
    sys.exit(main())
