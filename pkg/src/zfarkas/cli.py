"""Command-line front end.

Exit codes: 0 feasible/yes, 1 infeasible/no, 2 parse error, 3 precondition
error, 4 a ``--verify`` cross-check disagreed.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import graphs as gr
from .errors import BudgetExceeded, PreconditionError
from .farkas import (
    Decision,
    FeasibilityProblem,
    NotFarkasRelated,
    integer_feasible,
    is_farkas_related,
    rational_feasible,
)
from .formats import GraphFile, ParseError, is_graph_text, parse_graph, parse_matrix
from .indecomp import enumerate_indecomposables
from .oracle import BoxSearchBudget, brute_force_box

EXIT_YES, EXIT_NO, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3, 4


class _Out:
    """Collects report lines and, in JSON mode, a dict printed once at the end."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}

    def line(self, text: str):
        if not self.as_json:
            print(text)

    def set(self, **kw):
        self.data.update({k: _jsonable(v) for k, v in kw.items()})

    def flush(self):
        if self.as_json:
            print(json.dumps(self.data, sort_keys=True))


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _vec(v: Sequence) -> str:
    return " ".join(str(x) for x in v)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _columns(text: str) -> list:
    """Columns of a matrix file, or of the (directed) incidence matrix of a graph file."""
    if is_graph_text(text):
        G = parse_graph(text).graph
        M = gr.incidence(G) if isinstance(G, gr.Graph) else gr.directed_incidence(G)
        return list(M.columns)
    return list(parse_matrix(text).matrix.columns)


# --- subcommands ------------------------------------------------------------


def cmd_check_farkas(args, out: _Out) -> int:
    ok, circ = is_farkas_related(_columns(_read(args.file)))
    out.set(farkas_related=ok, circuit=list(circ.coeffs) if circ else None)
    if ok:
        out.line("YES")
        return EXIT_YES
    out.line("NO")
    out.line(f"circuit: {_vec(circ.coeffs)}")
    return EXIT_NO


def _report_decision(dec: Decision, out: _Out):
    out.set(verdict=dec.verdict.value, feasible=dec.feasible)
    if dec.feasible:
        out.line("Feasible")
        out.line(f"x: {_vec(dec.solution)}")
        out.set(solution=list(dec.solution))
        return
    if dec.witness is not None:
        out.line("Infeasible (inequality)")
        out.line(f"u: {_vec(dec.witness.rep)}")
        out.line(f"lhs: {dec.lhs}")
        out.line(f"rhs: {dec.rhs}")
        out.set(witness=list(dec.witness.rep), lhs=dec.lhs, rhs=dec.rhs)
        if dec.cut is not None:
            out.line("cut: " + " | ".join(_vec(p) for p in dec.cut))
            out.set(cut=[list(p) for p in dec.cut])
    else:
        out.line("Infeasible (lattice)")
        if dec.lattice_row is not None:
            out.line(f"lattice row: {dec.lattice_row}")
            out.set(lattice_row=dec.lattice_row)
        if dec.lhs is not None:
            out.set(lhs=dec.lhs, rhs=dec.rhs)
    out.line(f"reason: {dec.reason}")
    out.set(reason=dec.reason)


def cmd_solve(args, out: _Out) -> int:
    prob = parse_matrix(_read(args.file)).problem()
    try:
        dec = rational_feasible(prob) if args.rational else integer_feasible(prob)
    except NotFarkasRelated as exc:
        out.set(error="not Farkas-related", circuit=list(exc.circuit.coeffs))
        out.line("columns are not Farkas-related")
        out.line(f"circuit: {_vec(exc.circuit.coeffs)}")
        return EXIT_PRECONDITION
    _report_decision(dec, out)
    code = EXIT_YES if dec.feasible else EXIT_NO
    if args.verify and not args.rational:
        try:
            truth = brute_force_box(prob, BoxSearchBudget(args.budget))
        except BudgetExceeded:
            out.line("verify: skipped (box exceeds budget)")
            out.set(verify="skipped")
            return code
        agree = (truth is not None) == dec.feasible
        out.line("verify: agrees" if agree else "verify: MISMATCH")
        out.set(verify="agrees" if agree else "mismatch")
        if not agree:
            print("brute-force search disagrees with the decision", file=sys.stderr)
            return EXIT_VERIFY
    return code


def cmd_indecomposables(args, out: _Out) -> int:
    text = _read(args.file)
    if args.closed_form:
        if not is_graph_text(text):
            raise ParseError("--closed-form needs a graph file")
        G = parse_graph(text).graph
        if isinstance(G, gr.Digraph):
            pts = gr.d_indecomposables(G)
        elif args.orientation:
            pts = gr.gz_indecomposables(G)
        else:
            pts = gr.g_indecomposables(G)
    else:
        if args.orientation:
            G = parse_graph(text).graph
            if not isinstance(G, gr.Graph):
                raise ParseError("--orientation needs an undirected graph file")
            vs = gr.orientation_system(G)
        else:
            vs = _columns(text)
        pts = enumerate_indecomposables(vs) if any(any(v) for v in vs) else []
    reps = sorted(p.rep for p in pts)
    for r in reps:
        out.line(_vec(r))
    out.set(points=[list(r) for r in reps])
    return EXIT_YES


def _realize_edges(G: gr.Graph, gf: GraphFile, out: _Out) -> int:
    if gf.vertex_values is None:
        raise ParseError("graph file needs an s: vector")
    lower = gf.lower if gf.lower is not None else (0,) * G.m
    upper = gf.upper if gf.upper is not None else (1,) * G.m
    if gr.bipartition(G) is not None:
        dec = gr.gale_ryser_feasible(G, gf.vertex_values, lower, upper, left=gf.left)
    else:
        dec = gr.nonbipartite_feasible(G, gf.vertex_values, lower, upper)
    return _realize_report(dec, G.edges, out)


def _realize_report(dec: Decision, edges, out: _Out) -> int:
    out.set(verdict="YES" if dec.feasible else "NO")
    if not dec.feasible:
        out.line("NO")
        out.line(f"reason: {dec.reason}")
        out.set(reason=dec.reason)
        if dec.cut is not None:
            out.line("cut: " + " | ".join(_vec(p) for p in dec.cut))
            out.line(f"lhs: {dec.lhs}")
            out.line(f"rhs: {dec.rhs}")
            out.set(cut=[list(p) for p in dec.cut], lhs=dec.lhs, rhs=dec.rhs)
        return EXIT_NO
    out.line("YES")
    for (i, j), x in zip(edges, dec.solution):
        out.line(f"{i} {j} {x}")
    out.set(values=[[i, j, x] for (i, j), x in zip(edges, dec.solution)])
    return EXIT_YES


def _orientation_report(D: Optional[gr.Digraph], out: _Out) -> int:
    if D is None:
        out.line("NO")
        out.set(verdict="NO")
        return EXIT_NO
    out.line("YES")
    for i, j in D.arcs:
        out.line(f"{i} -> {j}")
    out.set(verdict="YES", arcs=[list(a) for a in D.arcs])
    return EXIT_YES


def cmd_realize(args, out: _Out) -> int:
    kind = args.kind
    if kind == "signed-seq":
        d = args.values
        ordered = sorted(d, reverse=True)
        ok = gr.signed_graphical(ordered)
        return _orientation_report(gr.realize_signed_sequence(d) if ok else None, out)
    if kind == "landau" and args.tournament is not None:
        if args.file is not None:
            raise ParseError("give either a file or --tournament, not both")
        r = args.tournament
        G = gr.Graph.complete(len(r))
        if len(r) < 2:
            raise PreconditionError("a tournament needs at least two vertices")
        ok = gr.orientation_scores_feasible(G, r)
        return _orientation_report(gr.orient_with_scores(G, r) if ok else None, out)
    if args.file is None:
        raise ParseError(f"realize {kind} needs a graph file")
    gf = parse_graph(_read(args.file))
    G = gf.graph
    if kind == "gale-ryser":
        if not isinstance(G, gr.Graph):
            raise ParseError("gale-ryser needs an undirected graph file")
        return _realize_edges(G, gf, out)
    if kind == "landau":
        if not isinstance(G, gr.Digraph):
            raise ParseError("landau needs a digraph file (or --tournament)")
        if gf.vertex_values is None:
            raise ParseError("digraph file needs an r: vector")
        lower = gf.lower if gf.lower is not None else (0,) * G.m
        upper = gf.upper if gf.upper is not None else (1,) * G.m
        dec = gr.landau_flow_feasible(G, gf.vertex_values, lower, upper)
        return _realize_report(dec, G.arcs, out)
    # scores
    if not isinstance(G, gr.Graph):
        raise ParseError("scores needs an undirected graph file")
    if gf.vertex_values is None:
        raise ParseError("graph file needs an r: vector of out-degrees")
    ok = gr.orientation_scores_feasible(G, gf.vertex_values)
    return _orientation_report(gr.orient_with_scores(G, gf.vertex_values) if ok else None, out)


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zfarkas", description="Exact integer feasibility of box-constrained linear systems.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-farkas", help="test whether every circuit has entries in {-1,0,1}")
    c.add_argument("file")
    c.set_defaults(func=cmd_check_farkas)

    s = sub.add_parser("solve", help="decide integer feasibility and print a solution or certificate")
    s.add_argument("file")
    s.add_argument("--verify", action="store_true", help="cross-check against brute-force search")
    s.add_argument("--budget", type=int, default=10**6, help="max box points for --verify")
    s.add_argument("--rational", action="store_true", help="decide rational feasibility instead")
    s.set_defaults(func=cmd_solve)

    i = sub.add_parser("indecomposables", help="list indecomposable points, one per line")
    i.add_argument("file")
    i.add_argument("--closed-form", action="store_true", help="use the graph formulas")
    i.add_argument("--orientation", action="store_true", help="use the orientation system of a graph")
    i.set_defaults(func=cmd_indecomposables)

    r = sub.add_parser("realize", help="graph realization problems")
    r.add_argument("kind", choices=["gale-ryser", "landau", "signed-seq", "scores"])
    r.add_argument("rest", nargs="*", help="graph file, or integers for signed-seq")
    r.add_argument("--tournament", type=int, nargs="+", metavar="R", help="score sequence on K_n (landau)")
    r.set_defaults(func=cmd_realize)
    return p


def _fix_realize_args(args):
    if args.kind == "signed-seq":
        try:
            args.values = [int(x) for x in args.rest]
        except ValueError:
            raise ParseError("signed-seq takes integers") from None
        args.file = None
    else:
        if len(args.rest) > 1:
            raise ParseError(f"realize {args.kind} takes one file")
        args.file = args.rest[0] if args.rest else None


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # allow --json anywhere on the line
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    # negative integers after signed-seq are values, not options
    if len(argv) >= 2 and argv[0] == "realize" and argv[1] == "signed-seq":
        argv = argv[:2] + ["--"] + argv[2:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(as_json)
    try:
        if args.command == "realize":
            _fix_realize_args(args)
        code = args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        out.set(error=str(exc))
        out.flush()
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        out.set(error=str(exc))
        out.flush()
        return EXIT_PRECONDITION
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
