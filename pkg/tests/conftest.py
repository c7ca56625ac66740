import random
from itertools import product

import networkx as nx
import pytest

from zfarkas.graphs import Digraph, Graph

# Lines recorded by the acceptance module, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def atlas_graphs(max_n, max_m=None, connected=True):
    """Every simple graph up to isomorphism with 1..max_n vertices, as Graph objects."""
    out = []
    for H in nx.graph_atlas_g():
        n = H.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if max_m is not None and H.number_of_edges() > max_m:
            continue
        if connected and not nx.is_connected(H):
            continue
        edges = tuple(sorted((min(i, j) + 1, max(i, j) + 1) for i, j in H.edges()))
        out.append(Graph(n, edges))
    return out


def orientations(G):
    for bits in product((0, 1), repeat=G.m):
        yield Digraph(G.n, tuple((i, j) if b == 0 else (j, i) for (i, j), b in zip(G.edges, bits)))


def random_connected_graph(rng: random.Random, n, max_m):
    """Random spanning tree plus extra edges, at most max_m edges in total."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    others = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) not in edges]
    rng.shuffle(others)
    extra = rng.randint(0, max(0, min(len(others), max_m - len(edges))))
    edges |= set(others[:extra])
    return Graph(n, tuple(sorted(edges)))


@pytest.fixture
def rng():
    return random.Random(20240611)
