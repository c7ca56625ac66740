"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line; the lines are repeated in the
pytest terminal summary and printed when the module runs as a script.
All comparisons are exact.
"""
import random
import time
from fractions import Fraction
from itertools import product

from zfarkas.exactlin import IntMatrix, combine, inner, rank
from zfarkas.farkas import (
    FeasibilityProblem,
    Verdict,
    block_construct,
    integer_feasible,
    is_farkas_related,
    rational_feasible,
)
from zfarkas.graphs import (
    Digraph,
    Graph,
    d_indecomposables,
    directed_incidence,
    g_indecomposables,
    gale_ryser_feasible,
    gz_indecomposables,
    has_two_edge_disjoint_odd_cycles,
    incidence,
    orientation_scores_feasible,
    orientation_system,
    realize_signed_sequence,
    signed_graphical,
)
from zfarkas.indecomp import decompose, enumerate_indecomposables, is_indecomposable
from zfarkas.oracle import (
    brute_force_box,
    brute_force_orientations,
    fourier_motzkin_feasible,
    rounding_condition_holds,
)

from conftest import ACCEPTANCE_LINES, atlas_graphs, orientations, random_connected_graph


def report(num, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def rand_columns(rng, n, m, lo=-1, hi=1):
    return tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(m))


def generic_reps(vs):
    if not any(any(v) for v in vs):
        return set()
    return {p.rep for p in enumerate_indecomposables(vs)}


def test_criterion_01_integer_feasibility_matches_box_search():
    rng = random.Random(101)
    start = time.perf_counter()
    count, bad = 0, []
    verdicts = {v: 0 for v in Verdict}
    while count < 200:
        n, m = rng.randint(1, 4), rng.randint(1, 6)
        vs = rand_columns(rng, n, m)
        if not is_farkas_related(vs)[0]:
            continue
        lower = [rng.randint(-2, 2) for _ in range(m)]
        upper = [rng.randint(a, 2) for a in lower]
        x = [rng.randint(a, b) for a, b in zip(lower, upper)]
        w = combine(vs, x, n)
        if rng.random() < 0.5:
            w = tuple(t + rng.randint(-1, 1) for t in w)
        prob = FeasibilityProblem(vs, tuple(lower), tuple(upper), w)
        dec = integer_feasible(prob)
        truth = brute_force_box(prob)
        verdicts[dec.verdict] += 1
        if dec.feasible != (truth is not None) or (dec.feasible and not prob.satisfied_by(dec.solution)):
            bad.append(prob)
        count += 1
    elapsed = time.perf_counter() - start
    mix = ", ".join(f"{v.value}={k}" for v, k in verdicts.items())
    report(1, not bad and elapsed < 60,
           f"{count - len(bad)}/{count} instances agree with box search ({mix}); {elapsed:.1f}s")


def test_criterion_02_circuit_criterion_matches_rounding_condition():
    rng = random.Random(202)
    bad, non_farkas = [], 0
    for _ in range(100):
        n, m = rng.randint(1, 3), rng.randint(1, 5)
        vs = rand_columns(rng, n, m)
        ok = is_farkas_related(vs)[0]
        non_farkas += not ok
        if ok != rounding_condition_holds(vs, kmax=6):
            bad.append(vs)
    report(2, not bad, f"{100 - len(bad)}/100 agree with the rounding condition for k <= 6 "
                       f"({non_farkas} not Farkas-related)")


def test_criterion_03_graph_farkas_criterion():
    graphs = atlas_graphs(6)
    bad = [G for G in graphs
           if has_two_edge_disjoint_odd_cycles(G) == is_farkas_related(incidence(G).columns)[0]]
    k4 = is_farkas_related(incidence(Graph.complete(4)).columns)[0]
    k5 = is_farkas_related(incidence(Graph.complete(5)).columns)[0]
    anchors_ok = k4 and not k5
    report(3, not bad and anchors_ok,
           f"{len(graphs) - len(bad)}/{len(graphs)} connected graphs on <= 6 vertices agree; "
           f"K4 Farkas={k4} (expected True), K5 Farkas={k5} (expected False)")


def test_criterion_04_directed_incidence_is_farkas():
    rng = random.Random(404)
    bad, arcs = 0, 0
    for _ in range(100):
        n = rng.randint(2, 7)
        p = rng.uniform(0.2, 0.6)
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
        D = Digraph(n, tuple((i, j) if rng.random() < 0.5 else (j, i) for i, j in pairs))
        arcs += D.m
        bad += not is_farkas_related(directed_incidence(D).columns)[0]
    report(4, bad == 0, f"{100 - bad}/100 random oriented graphs (n <= 7, {arcs} arcs total) are Farkas")


def test_criterion_05_closed_form_indecomposables():
    graphs = atlas_graphs(5, max_m=7)
    failures = []
    digraphs = 0
    for G in graphs:
        if {p.rep for p in g_indecomposables(G)} != generic_reps(incidence(G).columns):
            failures.append(("g", G))
        if {p.rep for p in gz_indecomposables(G)} != generic_reps(orientation_system(G)):
            failures.append(("gz", G))
        for D in orientations(G):
            digraphs += 1
            if {p.rep for p in d_indecomposables(D)} != generic_reps(directed_incidence(D).columns):
                failures.append(("d", D))
    report(5, not failures, f"{len(graphs)} graphs (g, gz) and {digraphs} orientations (d) with n <= 5, "
                            f"m <= 7; {len(failures)} mismatches")


def test_criterion_06_gale_ryser_on_complete_bipartite():
    checked, bad = 0, 0
    for r, s in product(range(1, 4), repeat=2):
        G = Graph.complete_bipartite(r, s)
        achievable = set()
        for bits in product((0, 1), repeat=G.m):
            deg = [0] * G.n
            for (i, j), b in zip(G.edges, bits):
                deg[i - 1] += b
                deg[j - 1] += b
            achievable.add(tuple(deg))
        zeros, ones = [0] * G.m, [1] * G.m
        for sL in product(range(s + 1), repeat=r):
            for sR in product(range(r + 1), repeat=s):
                deg = sL + sR
                dec = gale_ryser_feasible(G, deg, zeros, ones, left=range(1, r + 1))
                ok = dec.feasible == (deg in achievable)
                if dec.feasible:
                    ok = ok and combine(incidence(G).columns, dec.solution, G.n) == deg
                bad += not ok
                checked += 1
    report(6, bad == 0, f"{checked - bad}/{checked} degree pairs on K_(r,s), r, s <= 3, agree with "
                        f"all 0/1 adjacency matrices")


def test_criterion_07_signed_graphical_sequences():
    n = 4
    signed = brute_force_orientations(Graph.complete(n)).signed
    checked, bad = 0, 0
    for d in product(range(-(n - 1), n), repeat=n):
        if list(d) != sorted(d, reverse=True):
            continue
        printed = sum(d) == 0 and all(sum(d[:l]) <= l * (n - l) for l in range(1, n + 1))
        got = signed_graphical(d)
        ok = got == (d in signed) == printed
        if got:
            D = realize_signed_sequence(d)
            net = [0] * n
            for i, j in D.arcs:
                net[i - 1] += 1
                net[j - 1] -= 1
            ok = ok and tuple(net) == d
        bad += not ok
        checked += 1
    report(7, bad == 0, f"{checked - bad}/{checked} nonincreasing sequences agree with all 3^6 oriented "
                        f"graphs on 4 vertices and with the sum/prefix conditions")


def _scores(G):
    out = set()
    for bits in product((0, 1), repeat=G.m):
        r = [0] * G.n
        for (i, j), b in zip(G.edges, bits):
            r[(i if b == 0 else j) - 1] += 1
        out.add(tuple(r))
    return out


def test_criterion_08_orientation_scores():
    rng = random.Random(808)
    bad, checked = 0, 0
    for n in range(1, 6):
        G = Graph.complete(n)
        truth = _scores(G)
        for r in product(range(n), repeat=n):
            bad += orientation_scores_feasible(G, r) != (r in truth)
            checked += 1
    tournaments = checked
    for _ in range(50):
        G = random_connected_graph(rng, rng.randint(2, 7), 10)
        truth = _scores(G)
        ranges = [range(G.degree(v) + 1) for v in range(1, G.n + 1)]
        total = 1
        for rg in ranges:
            total *= len(rg)
        if total <= 3000:
            cands = set(product(*ranges))
        else:
            cands = set(truth) | {tuple(rng.choice(rg) for rg in ranges) for _ in range(600)}
        for r in sorted(cands):
            bad += orientation_scores_feasible(G, r) != (r in truth)
            checked += 1
    report(8, bad == 0, f"{checked - bad}/{checked} score vectors agree ({tournaments} on K_n, n <= 5; "
                        f"the rest on 50 random connected graphs with m <= 10)")


def _random_block(rng):
    n, m = rng.randint(1, 3), rng.randint(1, 3)
    A = IntMatrix.from_rows([[rng.randint(-1, 1) for _ in range(m)] for _ in range(n)], ncols=m)
    B = IntMatrix.from_rows([[rng.randint(-1, 1) for _ in range(m)] for _ in range(n)], ncols=m)
    while True:
        C = IntMatrix.from_rows([[rng.randint(-1, 1) for _ in range(m)] for _ in range(m)], ncols=m)
        if rank(C) == m:
            break
    rows = []
    for _ in range(m):
        row = [0] * m
        if rng.random() < 0.7:
            row[rng.randrange(m)] = rng.choice((1, -1))
        rows.append(row)
    return A, B, C, IntMatrix.from_rows(rows, ncols=m)


def test_criterion_09_block_construction():
    rng = random.Random(909)
    bad, non_farkas = 0, 0
    for _ in range(50):
        A, B, C, D = _random_block(rng)
        E = block_construct(A, B, C, D)
        lhs = is_farkas_related(E.columns)[0]
        rhs = is_farkas_related((A - B @ D).columns)[0]
        non_farkas += not rhs
        bad += lhs != rhs
    report(9, bad == 0, f"{50 - bad}/50 block matrices agree with A - B D ({non_farkas} not Farkas-related)")


def test_criterion_10_decomposition_contract():
    rng = random.Random(1010)
    bad, parts_total, done = 0, 0, 0
    while done < 100:
        n, m = rng.randint(1, 4), rng.randint(1, 6)
        vs = rand_columns(rng, n, m, -2, 2)
        coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(m)]
        u = combine(vs, coeffs, n)
        if not any(u):
            continue
        parts = decompose(u, vs)
        parts_total += len(parts)
        ok = all(sum(p[i] for p in parts) == u[i] for i in range(n))
        ok = ok and all(is_indecomposable(p, vs) for p in parts)
        ok = ok and all(inner(u, v) * inner(p, v) >= 0 for p in parts for v in vs)
        bad += not ok
        done += 1
    report(10, bad == 0, f"{100 - bad}/100 decompositions satisfy sum, indecomposability and sign "
                         f"compatibility ({parts_total} parts)")


def test_criterion_11_rational_feasibility_matches_elimination():
    rng = random.Random(1111)
    bad, feasible = 0, 0
    for _ in range(100):
        n, m = rng.randint(1, 3), rng.randint(1, 5)
        vs = rand_columns(rng, n, m, -2, 2)
        lower = [rng.randint(-3, 3) for _ in range(m)]
        upper = [rng.randint(a, 3) for a in lower]
        prob = FeasibilityProblem(vs, tuple(lower), tuple(upper), tuple(rng.randint(-4, 4) for _ in range(n)))
        got = rational_feasible(prob)
        feasible += got.feasible
        ok = got.feasible == fourier_motzkin_feasible(prob)
        if got.feasible:
            ok = ok and all(a <= x <= b for a, x, b in zip(lower, got.solution, upper)) \
                and combine(vs, got.solution, n) == prob.target
        bad += not ok
    report(11, bad == 0, f"{100 - bad}/100 agree with Fourier-Motzkin elimination ({feasible} feasible)")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
