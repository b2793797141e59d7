import itertools
import random

import pytest

from toroidal import (
    Graph,
    K33Found,
    SideComponent,
    decompose_by_corners,
    find_k33_subdivision,
    find_k5_subdivision,
    find_minor,
    find_subdivision,
    is_k33_free,
    is_planar,
    is_special,
    m_side_components,
)

from conftest import all_labeled_graphs, random_graph, subdivide_edge


def test_m_graph_structure(mgraph):
    assert mgraph.n == 8 and mgraph.m == 19
    assert mgraph.degree(0) == 7 and mgraph.degree(1) == 7
    remainder = mgraph.induced_subgraph([v for v in mgraph.vertices if v > 1])
    comps = remainder.connected_components()
    assert len(comps) == 2
    assert all(remainder.induced_subgraph(c).m == 3 for c in comps)


def test_k5_decomposition_has_ten_single_edge_components(k5):
    dec = decompose_by_corners(k5, find_k5_subdivision(k5))
    assert len(dec.components) == 10
    assert all(sc.subgraph.m == 1 for sc in dec.components)
    assert {sc.corners for sc in dec.components} == set(
        itertools.combinations(range(5), 2)
    )


def test_bridge_with_three_corners_raises_k33(k5):
    g = Graph(list(k5.vertices) + [9], list(k5.edges) + [(9, 0), (9, 1), (9, 2)])
    with pytest.raises(K33Found) as exc:
        decompose_by_corners(g, find_subdivision(k5, "K5"))
    exc.value.witness.validate(g)
    assert exc.value.witness.pattern == "K3,3"


def test_m_graph_side_components(mgraph):
    dec = m_side_components(mgraph, find_subdivision(mgraph, "M"))
    assert len(dec.components) == 19
    assert all(sc.subgraph.m == 1 for sc in dec.components)
    assert dec.central_component.corners == (0, 1)


def test_g4_central_component_is_k5_minus_edge(g4):
    w = find_subdivision(g4, "M")
    dec = m_side_components(g4, w)
    central = dec.central_component
    assert central.subgraph.n == 5 and central.subgraph.m == 9
    assert not central.corner_edge_present
    assert is_planar(central.subgraph) and not is_planar(central.augmented)
    others = [sc for sc in dec.components if sc is not central]
    assert all(sc.subgraph.m == 1 for sc in others)


def test_m_with_subdivided_edge_gives_path_component(mgraph):
    g = subdivide_edge(mgraph, 2, 3)
    dec = m_side_components(g, find_subdivision(g, "M"))
    sc = dec.component(2, 3)
    assert sc.subgraph.n == 3 and sc.subgraph.m == 2


def test_nonadjacent_m_corner_bridge_raises_k33(mgraph):
    # vertices 2 and 5 are in different triangles, so not adjacent in M
    g = Graph(list(mgraph.vertices) + [8], list(mgraph.edges) + [(8, 2), (8, 5)])
    w = find_subdivision(mgraph, "M")
    with pytest.raises(K33Found) as exc:
        decompose_by_corners(g, w)
    exc.value.witness.validate(g)


def test_decomposition_partitions_host_edges(k5, mgraph, g4):
    for g in (k5, mgraph, g4):
        w = find_k5_subdivision(g)
        dec = decompose_by_corners(g, w)
        seen = []
        for sc in dec.components:
            seen.extend(sc.subgraph.edges)
        assert sorted(seen) == list(g.edges)


def test_is_special_on_k5_minus_edge(k5):
    sub = k5.delete_edge(0, 1)
    sc = SideComponent((0, 1), (0, 1), sub, sub.add_edge(0, 1), ())
    assert is_special(sc)


def test_is_special_rejects_present_edge_and_planar_augmentation():
    edge = Graph((), [(0, 1)])
    assert not is_special(SideComponent((0, 1), (0, 1), edge, edge, ()))
    p = Graph((), [(0, 9), (9, 1)])
    assert not is_special(SideComponent((0, 1), (0, 1), p, p.add_edge(0, 1), ()))


def test_special_component_augmentation_has_tk5_through_corners(k5):
    sub = k5.delete_edge(0, 1)
    sc = SideComponent((0, 1), (0, 1), sub, sub.add_edge(0, 1), ())
    assert is_special(sc)
    w = find_subdivision(sc.augmented, "K5", require_corners={0: 0, 1: 1})
    assert w is not None and {0, 1} <= set(w.corners)


def test_is_k33_free_classics(k5, k33, mgraph, g4):
    assert is_k33_free(k5)
    assert is_k33_free(mgraph)
    assert is_k33_free(g4)
    assert not is_k33_free(k33)
    assert not is_k33_free(Graph.complete(6))


def test_k33_witness_extraction(k33):
    w = find_k33_subdivision(Graph.complete(6))
    w.validate(Graph.complete(6))
    assert find_k33_subdivision(k33).pattern == "K3,3"
    assert find_k33_subdivision(Graph.complete(4)) is None


def test_k33_free_agrees_with_minor_search_small():
    k33 = Graph.complete_bipartite(3, 3)
    for g in all_labeled_graphs(5):
        assert is_k33_free(g) == (find_minor(g, k33) is None)


def test_k33_free_agreement_on_random_graphs():
    rng = random.Random(10)
    k33 = Graph.complete_bipartite(3, 3)
    for _ in range(120):
        g = random_graph(rng, rng.randint(6, 9), rng.uniform(0.2, 0.7))
        free = is_k33_free(g)
        assert free == (find_minor(g, k33) is None)
        w = find_k33_subdivision(g)
        assert (w is None) == free
        if w is not None:
            w.validate(g)


def test_k33_free_monotone_under_minors():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, 8, 0.5)
        if not is_k33_free(g):
            continue
        h = g
        for _ in range(3):
            if not h.edges:
                break
            e = rng.choice(h.edges)
            h = h.contract_edge(*e) if rng.random() < 0.5 else h.delete_edge(*e)
            assert is_k33_free(h)


def test_not_k33_free_preserved_by_adding_edges(k33):
    g = k33
    extra = [
        e for e in itertools.combinations(range(6), 2) if not g.has_edge(*e)
    ]
    for e in extra:
        g = g.add_edge(*e)
        assert not is_k33_free(g)
