import random
from itertools import product

import pytest

from zfarkas.errors import PreconditionError
from zfarkas.exactlin import lattice_solve
from zfarkas.farkas import FeasibilityProblem, Verdict, is_farkas_related
from zfarkas.graphs import (
    Digraph,
    Graph,
    bipartition,
    d_indecomposables,
    directed_incidence,
    enumerate_valid_cuts,
    g_indecomposables,
    gale_ryser_feasible,
    gz_indecomposables,
    has_two_edge_disjoint_odd_cycles,
    incidence,
    landau_flow_feasible,
    nonbipartite_feasible,
    orient_with_scores,
    orientation_scores_feasible,
    orientation_system,
    realize_signed_sequence,
    signed_graphical,
    theorem_condition_equivalence,
)
from zfarkas.oracle import brute_force_box

from conftest import random_connected_graph

TRIANGLE = Graph(3, ((1, 2), (2, 3), (1, 3)))
DTRIANGLE = Digraph(3, ((1, 2), (2, 3), (3, 1)))


def reps(points):
    return {p.rep for p in points}


def out_degrees(D):
    out = [0] * D.n
    for i, _ in D.arcs:
        out[i - 1] += 1
    return out


def test_graph_validation():
    assert Graph(3, ((2, 1),)).edges == ((1, 2),)
    for bad in [((1, 1),), ((1, 2), (2, 1)), ((1, 4),)]:
        with pytest.raises(ValueError):
            Graph(3, bad)
    with pytest.raises(ValueError):
        Digraph(2, ((1, 2), (2, 1)))


def test_incidence_examples():
    assert incidence(Graph(2, ((1, 2),))).columns == [(1, 1)]
    M = incidence(TRIANGLE)
    assert M.shape == (3, 3) and all(sum(c) == 2 for c in M.columns)
    assert incidence(Graph(3, ())).shape == (3, 0)


def test_directed_incidence_examples():
    assert directed_incidence(Digraph(2, ((1, 2),))).columns == [(1, -1)]
    cols = directed_incidence(DTRIANGLE).columns
    assert tuple(map(sum, zip(*cols))) == (0, 0, 0)


def test_orientation_system_example():
    assert orientation_system(Graph(2, ((1, 2),))) == [(1, -1, 1), (-1, 1, 1)]


def test_odd_cycle_examples():
    assert not has_two_edge_disjoint_odd_cycles(TRIANGLE)
    assert not has_two_edge_disjoint_odd_cycles(Graph.complete(4))
    # Two disjoint triangles joined by an edge.
    handcuff = Graph(6, ((1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)))
    assert has_two_edge_disjoint_odd_cycles(handcuff)
    assert not is_farkas_related(incidence(handcuff).columns)[0]
    # Disjoint triangles in separate components do not interact.
    apart = Graph(6, ((1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)))
    assert not has_two_edge_disjoint_odd_cycles(apart)


def test_k5_and_bowtie_are_farkas():
    # Triangles 123 and 145 share vertex 1; every circuit of K5 and of the
    # bowtie has +-1 coefficients, so neither graph is flagged.
    bowtie = Graph(5, ((1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)))
    for G in (Graph.complete(5), bowtie):
        assert is_farkas_related(incidence(G).columns)[0]
        assert not has_two_edge_disjoint_odd_cycles(G)


def test_closed_form_examples():
    K2 = Graph(2, ((1, 2),))
    assert reps(g_indecomposables(K2)) == {(1, 1), (-1, -1)}
    assert reps(d_indecomposables(Digraph(2, ((1, 2),)))) == {(1, -1), (-1, 1)}
    path = Digraph(3, ((1, 2), (2, 3)))
    assert (2, -1, -1) in reps(d_indecomposables(path))
    with pytest.raises(PreconditionError):
        g_indecomposables(Graph(3, ((1, 2),)))
    with pytest.raises(PreconditionError):
        d_indecomposables(Digraph(3, ((1, 2),)))
    with pytest.raises(PreconditionError):
        gz_indecomposables(Graph(3, ((1, 2),)))


def test_valid_cut_examples():
    path = Graph(3, ((1, 2), (2, 3)))
    assert set(enumerate_valid_cuts(path, "directed").parts) == {
        frozenset({1}), frozenset({3}), frozenset({1, 2}), frozenset({2, 3})}
    assert set(enumerate_valid_cuts(Graph(2, ((1, 2),)), "directed").parts) == {
        frozenset({1}), frozenset({2})}
    with pytest.raises(ValueError):
        enumerate_valid_cuts(path, "sideways")


def test_gale_ryser_examples():
    K22 = Graph.complete_bipartite(2, 2)
    d = gale_ryser_feasible(K22, (1, 1, 1, 1), [0] * 4, [1] * 4)
    assert d.feasible
    assert FeasibilityProblem(tuple(incidence(K22).columns), (0,) * 4, (1,) * 4,
                              (1, 1, 1, 1)).satisfied_by(d.solution)
    d = gale_ryser_feasible(K22, (2, 1, 1, 1), [0] * 4, [1] * 4)
    assert not d.feasible and d.reason == "side sums differ"
    d = gale_ryser_feasible(K22, (2, 0, 2, 0), [0] * 4, [1] * 4)
    assert d.verdict is Verdict.INFEASIBLE_INEQUALITY and d.lhs > d.rhs
    with pytest.raises(PreconditionError):
        gale_ryser_feasible(TRIANGLE, (2, 2, 2), [0] * 3, [1] * 3)
    with pytest.raises(PreconditionError):
        gale_ryser_feasible(K22, (1, 1, 1, 1), [0] * 4, [1] * 4, left=(1, 3))


def test_nonbipartite_examples():
    d = nonbipartite_feasible(TRIANGLE, (2, 2, 2), [0] * 3, [1] * 3)
    assert d.feasible and d.solution == (1, 1, 1)
    assert not nonbipartite_feasible(TRIANGLE, (1, 1, 1), [0] * 3, [1] * 3).feasible
    d = nonbipartite_feasible(TRIANGLE, (2, 0, 0), [0] * 3, [1] * 3)
    assert d.verdict is Verdict.INFEASIBLE_INEQUALITY
    with pytest.raises(PreconditionError):
        nonbipartite_feasible(Graph.complete_bipartite(2, 2), (1,) * 4, [0] * 4, [1] * 4)


def test_landau_examples():
    arc = Digraph(2, ((1, 2),))
    d = landau_flow_feasible(arc, (1, -1), [0], [1])
    assert d.feasible and d.solution == (1,)
    assert not landau_flow_feasible(arc, (1, 0), [0], [1]).feasible
    prob = FeasibilityProblem(tuple(directed_incidence(DTRIANGLE).columns), (-1,) * 3, (1,) * 3, (1, 1, -2))
    assert landau_flow_feasible(DTRIANGLE, (1, 1, -2), [-1] * 3, [1] * 3).feasible == (
        brute_force_box(prob) is not None)
    with pytest.raises(PreconditionError):
        landau_flow_feasible(Digraph(3, ((1, 2),)), (0, 0, 0), [0], [1])


def test_signed_sequence_examples():
    assert signed_graphical((2, 0, -2))
    assert not signed_graphical((3, 0, -1))
    assert signed_graphical((0, 0, 0))
    with pytest.raises(PreconditionError):
        signed_graphical((0, 1, -1))
    D = realize_signed_sequence((0, 2, -2))
    net = [0, 0, 0]
    for i, j in D.arcs:
        net[i - 1] += 1
        net[j - 1] -= 1
    assert net == [0, 2, -2]
    assert realize_signed_sequence((3, 0, -1)) is None


def test_orientation_score_examples():
    assert orientation_scores_feasible(TRIANGLE, (1, 1, 1))
    assert orientation_scores_feasible(TRIANGLE, (2, 1, 0))
    assert not orientation_scores_feasible(TRIANGLE, (3, 0, 0))
    D = orient_with_scores(TRIANGLE, (1, 1, 1))
    assert out_degrees(D) == [1, 1, 1] and D.underlying() == TRIANGLE
    assert orient_with_scores(TRIANGLE, (3, 0, 0)) is None
    with pytest.raises(PreconditionError):
        orientation_scores_feasible(Graph(3, ((1, 2),)), (1, 0, 0))


def test_lattice_conditions(rng):
    for _ in range(30):
        G = random_connected_graph(rng, rng.randint(2, 6), 9)
        s = [rng.randint(-2, 3) for _ in range(G.n)]
        lat = lattice_solve(incidence(G), s) is not None
        D = Digraph(G.n, G.edges)
        assert (lattice_solve(directed_incidence(D), s) is not None) == (sum(s) == 0)
        bp = bipartition(G)
        if bp is None:
            assert lat == (sum(s) % 2 == 0)
        else:
            L, R = bp
            assert lat == (sum(s[v - 1] for v in L) == sum(s[v - 1] for v in R))


def test_theorem_equivalence_bipartite(rng):
    done = 0
    while done < 50:
        G = random_connected_graph(rng, rng.randint(2, 6), 8)
        if has_two_edge_disjoint_odd_cycles(G):
            continue
        lower = [rng.randint(-1, 1) for _ in range(G.m)]
        upper = [a + rng.randint(0, 2) for a in lower]
        s = [rng.randint(-1, 3) for _ in range(G.n)]
        assert theorem_condition_equivalence(G, {"s": s, "lower": lower, "upper": upper})
        done += 1


def test_theorem_equivalence_digraph(rng):
    for _ in range(50):
        G = random_connected_graph(rng, rng.randint(2, 6), 8)
        D = Digraph(G.n, tuple((i, j) if rng.random() < 0.5 else (j, i) for i, j in G.edges))
        lower = [rng.randint(-1, 1) for _ in range(D.m)]
        upper = [a + rng.randint(0, 2) for a in lower]
        r = [rng.randint(-2, 2) for _ in range(D.n - 1)]
        r.append(-sum(r))
        assert theorem_condition_equivalence(D, {"r": r, "lower": lower, "upper": upper})


def test_theorem_equivalence_orientation(rng):
    for _ in range(50):
        G = random_connected_graph(rng, rng.randint(2, 5), 6)
        r = [rng.randint(0, G.degree(v)) for v in range(1, G.n + 1)]
        assert theorem_condition_equivalence(G, {"r": r})


def test_orientation_system_is_farkas(rng):
    for _ in range(6):
        G = random_connected_graph(rng, rng.randint(2, 5), 8)
        assert is_farkas_related(orientation_system(G))[0]


def test_score_brute_force_small():
    G = Graph(4, ((1, 2), (2, 3), (3, 4), (1, 4), (1, 3)))
    achieved = set()
    for bits in product((0, 1), repeat=G.m):
        out = [0] * 4
        for (i, j), b in zip(G.edges, bits):
            out[(i if b else j) - 1] += 1
        achieved.add(tuple(out))
    for r in product(range(4), repeat=4):
        assert orientation_scores_feasible(G, r) == (r in achieved)
