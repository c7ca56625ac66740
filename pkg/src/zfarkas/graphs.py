"""Graph and digraph front-ends.

Vertices are labelled ``1..n``; vertex ``i`` is coordinate ``i - 1`` of every
vector.  Edge and arc order is the input order and fixes the column order
(and the ``g_k`` coordinates of the orientation system).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence, Union

from .errors import DomainError, PreconditionError
from .exactlin import IntMatrix, IntVector, inner, primitive
from .farkas import (
    Decision,
    FeasibilityProblem,
    Verdict,
    integer_feasible,
    integer_solve,
)
from .indecomp import IndecomposablePoint, active_set


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((min(i, j), max(i, j)) for i, j in self.edges)
        seen = set()
        for i, j in edges:
            if i == j:
                raise DomainError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise DomainError(f"edge {i}-{j} leaves the vertex range 1..{self.n}")
            if (i, j) in seen:
                raise DomainError(f"duplicate edge {i}-{j}")
            seen.add((i, j))
        object.__setattr__(self, "edges", edges)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(1, n + 1), 2)))

    @classmethod
    def complete_bipartite(cls, r: int, s: int) -> "Graph":
        return cls(r + s, tuple((i, j) for i in range(1, r + 1) for j in range(r + 1, r + s + 1)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)


@dataclass(frozen=True)
class Digraph:
    """Oriented graph: no loops, no repeated arcs, at most one arc per vertex pair."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple((int(i), int(j)) for i, j in self.arcs)
        pairs = set()
        for i, j in arcs:
            if i == j:
                raise DomainError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise DomainError(f"arc {i}->{j} leaves the vertex range 1..{self.n}")
            key = frozenset((i, j))
            if key in pairs:
                raise DomainError(f"vertex pair {i},{j} carries more than one arc")
            pairs.add(key)
        object.__setattr__(self, "arcs", arcs)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def underlying(self) -> Graph:
        return Graph(self.n, self.arcs)


AnyGraph = Union[Graph, Digraph]


@dataclass(frozen=True)
class CutFamily:
    """Vertex subsets (or subset pairs) meeting a theorem's connectivity side conditions."""

    mode: str
    parts: tuple


# --- basic structure ------------------------------------------------------


def _pairs(G: AnyGraph):
    return G.edges if isinstance(G, Graph) else G.arcs


def _connected_on(vertices: Iterable[int], edges) -> bool:
    """Whether the graph on ``vertices`` using those of ``edges`` inside it is connected.

    The empty graph counts as connected.
    """
    vertices = set(vertices)
    if not vertices:
        return True
    adj = {v: [] for v in vertices}
    for i, j in edges:
        if i in vertices and j in vertices:
            adj[i].append(j)
            adj[j].append(i)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def is_connected(G: AnyGraph) -> bool:
    return _connected_on(range(1, G.n + 1), _pairs(G))


def components(n_or_vertices, edges) -> list[set[int]]:
    vertices = set(range(1, n_or_vertices + 1)) if isinstance(n_or_vertices, int) else set(n_or_vertices)
    adj = {v: [] for v in vertices}
    for i, j in edges:
        if i in vertices and j in vertices:
            adj[i].append(j)
            adj[j].append(i)
    out, seen = [], set()
    for s in sorted(vertices):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(comp)
    return out


def two_coloring(vertices: Iterable[int], edges) -> Optional[dict[int, int]]:
    """Proper 2-colouring of the induced subgraph, or ``None`` if it has an odd cycle."""
    vertices = set(vertices)
    adj = {v: [] for v in vertices}
    for i, j in edges:
        if i in vertices and j in vertices:
            adj[i].append(j)
            adj[j].append(i)
    color: dict[int, int] = {}
    for s in sorted(vertices):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def bipartition(G: Graph) -> Optional[tuple[frozenset, frozenset]]:
    """``(left, right)`` for a bipartite graph, the smallest vertex of each component on the left."""
    col = two_coloring(range(1, G.n + 1), G.edges)
    if col is None:
        return None
    return (frozenset(v for v, c in col.items() if c == 0), frozenset(v for v, c in col.items() if c == 1))


def _require_connected(G: AnyGraph):
    if not is_connected(G):
        raise PreconditionError("graph must be connected")


# --- matrices -------------------------------------------------------------


def _unit(n: int, i: int) -> list[int]:
    e = [0] * n
    e[i - 1] = 1
    return e


def incidence(G: Graph) -> IntMatrix:
    cols = [tuple(int(v in e) for v in range(1, G.n + 1)) for e in G.edges]
    return IntMatrix.from_columns(cols, nrows=G.n)


def directed_incidence(D: Digraph) -> IntMatrix:
    cols = []
    for i, j in D.arcs:
        c = [0] * D.n
        c[i - 1], c[j - 1] = 1, -1
        cols.append(tuple(c))
    return IntMatrix.from_columns(cols, nrows=D.n)


def orientation_system(G: Graph) -> list[IntVector]:
    """``z(e_k) = f_i - f_j + g_k`` and ``z'(e_k) = -f_i + f_j + g_k`` for each edge ``i < j``, interleaved."""
    n, m = G.n, G.m
    out = []
    for k, (i, j) in enumerate(G.edges):
        z = [0] * (n + m)
        z[i - 1], z[j - 1], z[n + k] = 1, -1, 1
        zp = [0] * (n + m)
        zp[i - 1], zp[j - 1], zp[n + k] = -1, 1, 1
        out += [tuple(z), tuple(zp)]
    return out


# --- odd cycles -----------------------------------------------------------


def _odd_cycle_vertex_sets(G: Graph) -> set[frozenset]:
    adj = {v: set() for v in range(1, G.n + 1)}
    for i, j in G.edges:
        adj[i].add(j)
        adj[j].add(i)
    found = set()

    def extend(start, path, on_path):
        v = path[-1]
        for w in adj[v]:
            if w == start and len(path) >= 3 and len(path) % 2 == 1:
                found.add(frozenset(path))
            elif w > start and w not in on_path:
                on_path.add(w)
                path.append(w)
                extend(start, path, on_path)
                path.pop()
                on_path.discard(w)

    for s in range(1, G.n + 1):
        extend(s, [s], {s})
    return found


def has_two_edge_disjoint_odd_cycles(G: Graph) -> bool:
    """Whether one component holds two odd cycles joined by a path, i.e. an odd "handcuff".

    The cycles must not share a vertex.  Two odd cycles through a common
    vertex form a closed even walk whose relation has coefficients +-1, so
    they do not obstruct Farkas-relatedness; vertex-disjoint ones in one
    component do (the joining path gets coefficient 2).  This makes the test
    agree exactly with the circuit criterion on the incidence matrix.
    """
    cycles = _odd_cycle_vertex_sets(G)
    for comp in components(G.n, G.edges):
        inside = [c for c in cycles if c <= comp]
        for a, b in combinations(inside, 2):
            if not (a & b):
                return True
    return False


# --- cut families ---------------------------------------------------------


def _subsets(items):
    items = sorted(items)
    for r in range(len(items) + 1):
        for c in combinations(items, r):
            yield frozenset(c)


def _bipartite_cuts(G: Graph, left: frozenset, right: frozenset):
    out = []
    n = G.n
    for I in _subsets(left):
        for J in _subsets(right):
            X = I | J
            if not X or len(X) == n:
                continue  # the formula vanishes
            Y = set(range(1, n + 1)) - X
            if _connected_on(X, G.edges) and _connected_on(Y, G.edges):
                out.append((I, J))
    return out


def _nonbipartite_cuts(G: Graph):
    out = []
    vs = range(1, G.n + 1)
    for labels in product((0, 1, 2), repeat=G.n):
        I = frozenset(v for v, t in zip(vs, labels) if t == 1)
        J = frozenset(v for v, t in zip(vs, labels) if t == 2)
        X = I | J
        if not X:
            continue
        cross = [(i, j) for i, j in G.edges if (i in I and j in J) or (i in J and j in I)]
        if not _connected_on(X, cross):
            continue
        rest = set(vs) - X
        if any(two_coloring(c, G.edges) is not None for c in components(rest, G.edges)):
            continue
        out.append((I, J))
    out.sort(key=lambda p: (sorted(p[0]), sorted(p[1])))
    return out


def _directed_cuts(G: AnyGraph):
    vs = set(range(1, G.n + 1))
    edges = _pairs(G)
    out = []
    for I in _subsets(vs):
        if not I or I == vs:
            continue
        if _connected_on(I, edges) and _connected_on(vs - I, edges):
            out.append(I)
    return out


def enumerate_valid_cuts(G: AnyGraph, mode: str, left: Optional[Iterable[int]] = None) -> CutFamily:
    """Cut families: ``"bipartite"`` pairs, ``"nonbipartite"`` pairs, or ``"directed"`` sets.

    ``"directed"`` also serves orientation problems on undirected graphs.
    """
    _require_connected(G)
    if mode == "bipartite":
        L, R = _checked_bipartition(G, left)
        parts = _bipartite_cuts(G, L, R)
    elif mode == "nonbipartite":
        parts = _nonbipartite_cuts(G)
    elif mode == "directed":
        parts = _directed_cuts(G)
    else:
        raise ValueError(f"unknown cut mode {mode!r}")
    return CutFamily(mode, tuple(parts))


def _checked_bipartition(G: Graph, left=None) -> tuple[frozenset, frozenset]:
    bp = bipartition(G)
    if bp is None:
        raise PreconditionError("graph is not bipartite")
    if left is None:
        return bp
    L = frozenset(left)
    R = frozenset(range(1, G.n + 1)) - L
    if any((i in L) == (j in L) for i, j in G.edges):
        raise PreconditionError("given left part is not a bipartition of the graph")
    return L, R


# --- closed-form indecomposable points -----------------------------------


def _points(vectors, vs) -> list[IndecomposablePoint]:
    reps = {}
    for u in vectors:
        if any(u):
            p = primitive(u)
            reps[p] = IndecomposablePoint(p, active_set(p, vs))
    return sorted(reps.values(), key=lambda p: p.rep)


def g_indecomposables(G: Graph) -> list[IndecomposablePoint]:
    _require_connected(G)
    vs = incidence(G).columns
    n = G.n
    bp = bipartition(G)
    vectors = []
    if bp is not None:
        L, R = bp
        for I, J in _bipartite_cuts(G, L, R):
            c = Fraction(len(I) + len(J), n)
            u = [(-c if v in L else c) + (v in I) - (v in J) for v in range(1, n + 1)]
            vectors += [u, [-x for x in u]]
    else:
        for I, J in _nonbipartite_cuts(G):
            vectors.append([int(v in I) - int(v in J) for v in range(1, n + 1)])
    return _points(vectors, vs)


def _uI(n, I):
    return [n * (v in I) - len(I) for v in range(1, n + 1)]


def d_indecomposables(D: Digraph) -> list[IndecomposablePoint]:
    _require_connected(D)
    vs = directed_incidence(D).columns
    return _points([_uI(D.n, I) for I in _directed_cuts(D)], vs)


def cut_edges(G: Graph, I) -> list[int]:
    """Indices ``k`` of edges with exactly one end in ``I``."""
    return [k for k, (i, j) in enumerate(G.edges) if (i in I) != (j in I)]


def gz_indecomposables(G: Graph) -> list[IndecomposablePoint]:
    _require_connected(G)
    n, m = G.n, G.m
    vs = orientation_system(G)
    vectors = []
    for I in _directed_cuts(G):
        base = _uI(n, I)
        EI = cut_edges(G, I)
        for J in _subsets(EI):
            g = [0] * m
            for k in EI:
                g[k] = -n if k in J else n
            vectors.append(base + g)
    for k in range(m):
        rest = [e for idx, e in enumerate(G.edges) if idx != k]
        if _connected_on(range(1, n + 1), rest):
            g = [0] * (n + m)
            g[n + k] = 1
            vectors += [g, [-x for x in g]]
    return _points(vectors, vs)


# --- realization theorems -------------------------------------------------


def _check_lengths(name, vec, size):
    if len(vec) != size:
        raise PreconditionError(f"{name} has length {len(vec)}, expected {size}")


def _solve_or_fail(prob: FeasibilityProblem) -> tuple:
    x = integer_solve(prob)
    if x is None:
        raise ArithmeticError("closed-form conditions hold but no integer solution was produced")
    return x


def gale_ryser_feasible(G: Graph, s: Sequence[int], lower: Sequence[int], upper: Sequence[int],
                        left: Optional[Iterable[int]] = None) -> Decision:
    """Integer edge values ``lower <= x <= upper`` with vertex sums ``s`` on a connected bipartite graph.

    Checked by equal side sums plus one cut inequality per admissible ``(I, J)``.
    """
    _require_connected(G)
    L, R = _checked_bipartition(G, left)
    _check_lengths("s", s, G.n)
    _check_lengths("lower", lower, G.m)
    _check_lengths("upper", upper, G.m)
    sL = sum(s[v - 1] for v in L)
    sR = sum(s[v - 1] for v in R)
    if sL != sR:
        return Decision(Verdict.INFEASIBLE_LATTICE, lhs=Fraction(sL), rhs=Fraction(sR),
                        reason="side sums differ")
    for I, J in _bipartite_cuts(G, L, R):
        lhs = sum(s[v - 1] for v in I) - sum(s[v - 1] for v in J)
        rhs = 0
        for k, (i, j) in enumerate(G.edges):
            a, b = (i, j) if i in L else (j, i)  # a on the left, b on the right
            if a in I and b not in J:
                rhs += upper[k]
            elif a not in I and b in J:
                rhs -= lower[k]
        if lhs > rhs:
            c = Fraction(len(I) + len(J), G.n)
            u = [(-c if v in L else c) + (v in I) - (v in J) for v in range(1, G.n + 1)]
            pt = _points([u], incidence(G).columns)[0]
            return Decision(Verdict.INFEASIBLE_INEQUALITY, witness=pt, lhs=Fraction(lhs),
                            rhs=Fraction(rhs), cut=(sorted(I), sorted(J)),
                            reason="cut inequality fails")
    prob = FeasibilityProblem(tuple(incidence(G).columns), tuple(lower), tuple(upper), tuple(s))
    return Decision(Verdict.FEASIBLE, solution=_solve_or_fail(prob))


def nonbipartite_feasible(G: Graph, s: Sequence[int], lower: Sequence[int],
                          upper: Sequence[int]) -> Decision:
    """Same question on a connected non-bipartite graph without an odd handcuff."""
    _require_connected(G)
    if bipartition(G) is not None:
        raise PreconditionError("graph is bipartite; use gale_ryser_feasible")
    if has_two_edge_disjoint_odd_cycles(G):
        raise PreconditionError("graph has two odd cycles joined by a path; incidence is not Farkas")
    _check_lengths("s", s, G.n)
    _check_lengths("lower", lower, G.m)
    _check_lengths("upper", upper, G.m)
    if sum(s) % 2:
        return Decision(Verdict.INFEASIBLE_LATTICE, reason="degree sum is odd")
    for I, J in _nonbipartite_cuts(G):
        lhs = sum(s[v - 1] for v in I) - sum(s[v - 1] for v in J)
        rhs = 0
        for k, (i, j) in enumerate(G.edges):
            # weight = <1_I - 1_J, f_i + f_j>
            wgt = (i in I) - (i in J) + (j in I) - (j in J)
            rhs += wgt * (upper[k] if wgt > 0 else lower[k])
        if lhs > rhs:
            u = [int(v in I) - int(v in J) for v in range(1, G.n + 1)]
            pt = _points([u], incidence(G).columns)[0]
            return Decision(Verdict.INFEASIBLE_INEQUALITY, witness=pt, lhs=Fraction(lhs),
                            rhs=Fraction(rhs), cut=(sorted(I), sorted(J)),
                            reason="cut inequality fails")
    prob = FeasibilityProblem(tuple(incidence(G).columns), tuple(lower), tuple(upper), tuple(s))
    return Decision(Verdict.FEASIBLE, solution=_solve_or_fail(prob))


def landau_flow_feasible(D: Digraph, r: Sequence[int], lower: Sequence[int],
                         upper: Sequence[int]) -> Decision:
    """Integer arc values within bounds whose net outflow at each vertex is ``r``."""
    _require_connected(D)
    _check_lengths("r", r, D.n)
    _check_lengths("lower", lower, D.m)
    _check_lengths("upper", upper, D.m)
    if sum(r):
        return Decision(Verdict.INFEASIBLE_LATTICE, reason="net outflows do not sum to zero")
    for I in _directed_cuts(D):
        lhs = sum(r[v - 1] for v in I)
        rhs = 0
        for k, (i, j) in enumerate(D.arcs):
            if i in I and j not in I:
                rhs += upper[k]
            elif i not in I and j in I:
                rhs -= lower[k]
        if lhs > rhs:
            pt = _points([_uI(D.n, I)], directed_incidence(D).columns)[0]
            return Decision(Verdict.INFEASIBLE_INEQUALITY, witness=pt, lhs=Fraction(lhs),
                            rhs=Fraction(rhs), cut=(sorted(I),), reason="cut inequality fails")
    prob = FeasibilityProblem(tuple(directed_incidence(D).columns), tuple(lower), tuple(upper), tuple(r))
    return Decision(Verdict.FEASIBLE, solution=_solve_or_fail(prob))


def signed_graphical(d: Sequence[int]) -> bool:
    """Whether a nonincreasing ``d`` is the out-minus-in degree sequence of an oriented graph."""
    d = list(d)
    if any(a < b for a, b in zip(d, d[1:])):
        raise PreconditionError("sequence must be nonincreasing")
    n = len(d)
    if sum(d):
        return False
    total = 0
    for l in range(1, n + 1):
        total += d[l - 1]
        if total > l * (n - l):
            return False
    return True


def realize_signed_sequence(d: Sequence[int]) -> Optional[Digraph]:
    """An oriented graph with signed degree sequence ``d`` (any order), or ``None``."""
    n = len(d)
    if n < 2:
        return Digraph(n, ()) if all(x == 0 for x in d) else None
    K = Digraph(n, tuple(combinations(range(1, n + 1), 2)))
    dec = landau_flow_feasible(K, d, [-1] * K.m, [1] * K.m)
    if not dec.feasible:
        return None
    arcs = []
    for (i, j), x in zip(K.arcs, dec.solution):
        if x == 1:
            arcs.append((i, j))
        elif x == -1:
            arcs.append((j, i))
    return Digraph(n, tuple(arcs))


def orientation_scores_feasible(G: Graph, r: Sequence[int]) -> bool:
    """Whether ``r`` is the out-degree sequence of some orientation of the connected graph ``G``."""
    _require_connected(G)
    _check_lengths("r", r, G.n)
    if sum(r) != G.m:
        return False
    deg = [G.degree(v) for v in range(1, G.n + 1)]
    for I in _directed_cuts(G):
        if 2 * sum(r[v - 1] for v in I) > len(cut_edges(G, I)) + sum(deg[v - 1] for v in I):
            return False
    return True


def orientation_problem(G: Graph, r: Sequence[int]) -> FeasibilityProblem:
    """The orientation system with 0/1 bounds whose integer solutions are orientations with scores ``r``."""
    n, m = G.n, G.m
    target = [2 * r[v - 1] - G.degree(v) for v in range(1, n + 1)] + [1] * m
    return FeasibilityProblem(tuple(orientation_system(G)), (0,) * (2 * m), (1,) * (2 * m), tuple(target))


def orient_with_scores(G: Graph, r: Sequence[int]) -> Optional[Digraph]:
    """An orientation of ``G`` with out-degrees ``r``, built by the generic integer solver."""
    x = integer_solve(orientation_problem(G, r))
    if x is None:
        return None
    arcs = [(i, j) if x[2 * k] == 1 else (j, i) for k, (i, j) in enumerate(G.edges)]
    return Digraph(G.n, tuple(arcs))


def theorem_condition_equivalence(G: AnyGraph, instance: dict) -> bool:
    """Closed-form verdict == generic ``integer_feasible`` verdict on the same instance.

    ``instance`` keys: ``s``/``lower``/``upper`` for a Graph, ``r``/``lower``/``upper``
    for a Digraph, or just ``r`` for orientation scores on a Graph.
    """
    if isinstance(G, Digraph):
        closed = landau_flow_feasible(G, instance["r"], instance["lower"], instance["upper"]).feasible
        prob = FeasibilityProblem(tuple(directed_incidence(G).columns), tuple(instance["lower"]),
                                  tuple(instance["upper"]), tuple(instance["r"]))
    elif "s" in instance:
        if bipartition(G) is not None:
            dec = gale_ryser_feasible(G, instance["s"], instance["lower"], instance["upper"])
        else:
            dec = nonbipartite_feasible(G, instance["s"], instance["lower"], instance["upper"])
        closed = dec.feasible
        prob = FeasibilityProblem(tuple(incidence(G).columns), tuple(instance["lower"]),
                                  tuple(instance["upper"]), tuple(instance["s"]))
    else:
        closed = orientation_scores_feasible(G, instance["r"])
        prob = orientation_problem(G, instance["r"])
    return closed == integer_feasible(prob).feasible
