"""Text formats for problems and graphs.

Matrix file::

    # comments start with '#'
    n m
    <n rows of m integers>        columns are the vectors v_i
    bounds:                       optional; m lines "a_i b_i"
    target:                       optional; n integers

Graph file::

    graph n        (or: digraph n)
    i j            one edge/arc per line; this order fixes edge indices
    s: ...         optional vertex vector (also accepted: r:)
    bounds:        optional; one "a b" line per edge
    left: ...      optional left part of a bipartition

Section contents may share the keyword's line or follow on later lines.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import ZFarkasError
from .exactlin import IntMatrix
from .farkas import FeasibilityProblem
from .graphs import Digraph, Graph

SECTIONS = ("bounds", "target", "s", "r", "left")


class ParseError(ZFarkasError, ValueError):
    pass


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(tokens, what) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {what}: {tokens}") from None


def _split_sections(lines: list[str]) -> tuple[list[str], dict[str, list[str]]]:
    body: list[str] = []
    sections: dict[str, list[str]] = {}
    current = None
    for line in lines:
        head, sep, rest = line.partition(":")
        key = head.strip().lower()
        if sep and key in SECTIONS:
            if key in sections:
                raise ParseError(f"section {key!r} appears twice")
            current = key
            sections[key] = rest.split()
        elif current is None:
            body.append(line)
        else:
            sections[current] += line.split()
    return body, sections


@dataclass
class MatrixFile:
    matrix: IntMatrix
    lower: Optional[tuple[int, ...]] = None
    upper: Optional[tuple[int, ...]] = None
    target: Optional[tuple[int, ...]] = None

    def problem(self) -> FeasibilityProblem:
        if self.lower is None or self.target is None:
            raise ParseError("file needs both a bounds: and a target: section")
        return FeasibilityProblem(tuple(self.matrix.columns), self.lower, self.upper, self.target)


@dataclass
class GraphFile:
    graph: Union[Graph, Digraph]
    vertex_values: Optional[tuple[int, ...]] = None
    lower: Optional[tuple[int, ...]] = None
    upper: Optional[tuple[int, ...]] = None
    left: Optional[tuple[int, ...]] = None


def parse_matrix(text: str) -> MatrixFile:
    body, sec = _split_sections(_lines(text))
    if not body:
        raise ParseError("empty matrix file")
    header = _ints(body[0].split(), "header")
    if len(header) != 2 or min(header) < 0:
        raise ParseError("header must be 'n m'")
    n, m = header
    if m == 0 and len(body) == 1:
        body += [""] * n  # rows of an n x 0 matrix are blank lines, dropped above
    if len(body) - 1 != n:
        raise ParseError(f"expected {n} matrix rows, found {len(body) - 1}")
    rows = [_ints(line.split(), f"row {k + 1}") for k, line in enumerate(body[1:])]
    if any(len(r) != m for r in rows):
        raise ParseError(f"every row needs {m} entries")
    mf = MatrixFile(IntMatrix.from_rows(rows, ncols=m))
    if "bounds" in sec:
        mf.lower, mf.upper = _bounds(sec["bounds"], m)
    if "target" in sec:
        t = _ints(sec["target"], "target")
        if len(t) != n:
            raise ParseError(f"target needs {n} entries")
        mf.target = tuple(t)
    return mf


def _bounds(tokens, m):
    vals = _ints(tokens, "bounds")
    if len(vals) != 2 * m:
        raise ParseError(f"bounds need {m} pairs, got {len(vals)} numbers")
    lower, upper = tuple(vals[0::2]), tuple(vals[1::2])
    if any(a > b for a, b in zip(lower, upper)):
        raise ParseError("a lower bound exceeds its upper bound")
    return lower, upper


def parse_graph(text: str) -> GraphFile:
    body, sec = _split_sections(_lines(text))
    if not body:
        raise ParseError("empty graph file")
    head = body[0].split()
    if len(head) != 2 or head[0] not in ("graph", "digraph"):
        raise ParseError("first line must be 'graph n' or 'digraph n'")
    n = _ints(head[1:], "vertex count")[0]
    pairs = []
    for line in body[1:]:
        ij = _ints(line.split(), "edge")
        if len(ij) != 2:
            raise ParseError(f"edge line needs two vertices: {line!r}")
        pairs.append(tuple(ij))
    try:
        G = Graph(n, tuple(pairs)) if head[0] == "graph" else Digraph(n, tuple(pairs))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    gf = GraphFile(G)
    if "s" in sec and "r" in sec:
        raise ParseError("give either s: or r:, not both")
    vals = sec.get("s", sec.get("r"))
    if vals is not None:
        v = _ints(vals, "vertex vector")
        if len(v) != n:
            raise ParseError(f"vertex vector needs {n} entries")
        gf.vertex_values = tuple(v)
    if "bounds" in sec:
        gf.lower, gf.upper = _bounds(sec["bounds"], len(pairs))
    if "left" in sec:
        gf.left = tuple(_ints(sec["left"], "left"))
    return gf


def is_graph_text(text: str) -> bool:
    lines = _lines(text)
    return bool(lines) and lines[0].split()[0] in ("graph", "digraph")


def write_matrix(mf: MatrixFile) -> str:
    M = mf.matrix
    out = [f"{M.nrows} {M.ncols}"]
    out += [" ".join(map(str, r)) for r in M.rows]
    if mf.lower is not None:
        out.append("bounds:")
        out += [f"{a} {b}" for a, b in zip(mf.lower, mf.upper)]
    if mf.target is not None:
        out.append("target:")
        out.append(" ".join(map(str, mf.target)))
    return "\n".join(out) + "\n"


def write_problem(prob: FeasibilityProblem) -> str:
    return write_matrix(MatrixFile(prob.matrix, prob.lower, prob.upper, prob.target))


def write_graph(gf: GraphFile) -> str:
    G = gf.graph
    kind = "graph" if isinstance(G, Graph) else "digraph"
    pairs = G.edges if isinstance(G, Graph) else G.arcs
    out = [f"{kind} {G.n}"] + [f"{i} {j}" for i, j in pairs]
    if gf.vertex_values is not None:
        out.append(("s: " if kind == "graph" else "r: ") + " ".join(map(str, gf.vertex_values)))
    if gf.lower is not None:
        out.append("bounds:")
        out += [f"{a} {b}" for a, b in zip(gf.lower, gf.upper)]
    if gf.left is not None:
        out.append("left: " + " ".join(map(str, gf.left)))
    return "\n".join(out) + "\n"
