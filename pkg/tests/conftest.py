import itertools
import random

import pytest

from toroidal import Graph, builtin, m_graph


@pytest.fixture(scope="session")
def k4():
    return Graph.complete(4)


@pytest.fixture(scope="session")
def k5():
    return Graph.complete(5)


@pytest.fixture(scope="session")
def k33():
    return Graph.complete_bipartite(3, 3)


@pytest.fixture(scope="session")
def mgraph():
    return m_graph()


@pytest.fixture(scope="session")
def g4():
    return builtin("G4")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(range(n), edges)


def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    slots = list(itertools.combinations(range(n), 2))
    for bits in itertools.product((0, 1), repeat=len(slots)):
        yield Graph(range(n), [e for e, b in zip(slots, bits) if b])


def atlas_graphs(max_n: int = 7, min_n: int = 1):
    """All graphs up to isomorphism with min_n <= n <= max_n vertices
    (networkx atlas, complete through 7 vertices)."""
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if min_n <= n <= max_n:
            out.append(Graph(range(n), G.edges()))
    return out


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    w = max(g.vertices) + 1
    return Graph(
        list(g.vertices) + [w],
        [e for e in g.edges if e != ((u, v) if u < v else (v, u))] + [(u, w), (w, v)],
    )


def two_k5s_shared_vertex() -> Graph:
    k5 = Graph.complete(5)
    shift = lambda x: 0 if x == 0 else x + 4
    return Graph(
        range(9),
        list(k5.edges) + [tuple(sorted((shift(a), shift(b)))) for a, b in k5.edges],
    )
