import itertools
import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from ocdpoly.graph import Graph, members


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_ocd_counts(g: Graph) -> list[int]:
    """Reference counts computed with networkx predicates over every subset."""
    h = to_nx(g)
    counts = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            if not nx.is_dominating_set(h, s):
                continue
            rest = set(h) - set(s)
            if not rest or nx.is_connected(h.subgraph(rest)):
                counts[k] += 1
    return counts


def nx_dominating_counts(g: Graph) -> list[int]:
    h = to_nx(g)
    return [
        sum(1 for s in itertools.combinations(range(g.n), k) if nx.is_dominating_set(h, s))
        for k in range(g.n + 1)
    ]


def subset_masks(n: int):
    return range(1, 1 << n)


def as_sets(masks) -> list[frozenset]:
    return [frozenset(members(m)) for m in masks]


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def random_corpus(count: int, max_n: int, seed: int, densities=(0.1, 0.3, 0.5, 0.8)):
    from ocdpoly.graph import random_graph

    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        out.append(random_graph(n, densities[i % len(densities)], rng))
    return out


P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K1 = Graph(1, (0,))
K2 = Graph.from_edges(2, [(0, 1)])
K3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
E2 = Graph(2, (0, 0))
E3 = Graph(3, (0, 0, 0))


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("# path on four vertices\n4 3\n0 1\n1 2\n2 3\n")
    return path
