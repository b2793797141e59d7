import random

import pytest

from toroidal import (
    Graph,
    GraphInputError,
    SplitOperation,
    all_splits,
    apply_split,
    builtin,
    canonical_form,
    catalog,
    decide_toroidal,
    enumerate_splits,
    is_isomorphic,
    is_k33_free,
    is_topological_obstruction,
    make_g4,
    verify_minor_obstruction,
    verify_topological_obstruction,
)
from toroidal.obstructions import (
    MINOR_OBSTRUCTION_NAMES,
    MINOR_ORDER,
    REFERENCE,
    TOPOLOGICAL_OBSTRUCTION_NAMES,
    TOPOLOGICAL_ONLY,
)

from conftest import two_k5s_shared_vertex


def test_catalog_loads_and_validates():
    cat = catalog()
    assert set(MINOR_OBSTRUCTION_NAMES) <= set(cat)
    assert set(TOPOLOGICAL_OBSTRUCTION_NAMES) <= set(cat)
    for rec in cat.values():
        rec.validate()
    kinds = {rec.name: rec.kind for rec in cat.values()}
    assert kinds["K5"] == kinds["M"] == kinds["K3,3"] == REFERENCE
    assert all(kinds[n] == MINOR_ORDER for n in MINOR_OBSTRUCTION_NAMES)
    assert all(
        kinds[f"G{i}"] == TOPOLOGICAL_ONLY for i in range(5, 12)
    )


def test_builtin_m_graph():
    m = builtin("M")
    assert m.n == 8 and m.m == 19
    assert m.degree_sequence() == (7, 7, 4, 4, 4, 4, 4, 4)


def test_builtin_g4_matches_construction():
    g4 = builtin("G4")
    assert g4.n == 11 and g4.m == 27
    assert g4.degree_sequence() == (9, 9) + (4,) * 9
    assert is_isomorphic(g4, make_g4())


def test_builtin_k5():
    assert builtin("K5") == Graph.complete(5)


def test_builtin_unknown_name():
    with pytest.raises(GraphInputError):
        builtin("G12")


def test_g1_is_two_disjoint_k5s():
    k5 = Graph.complete(5)
    assert is_isomorphic(builtin("G1"), k5.disjoint_union(k5))


def test_g2_is_two_k5s_sharing_a_vertex():
    assert is_isomorphic(builtin("G2"), two_k5s_shared_vertex())


def test_minor_obstruction_verifier_on_g3():
    report = verify_minor_obstruction(builtin("G3"))
    assert report["passes"]
    assert all(d["status"] == "Toroidal" for d in report["deletions"])
    assert all(c["status"] == "Toroidal" for c in report["contractions"])


def test_k5_is_not_an_obstruction(k5):
    report = verify_minor_obstruction(k5)
    assert not report["passes"] and report["status"] == "Toroidal"


def test_m_graph_is_not_an_obstruction(mgraph):
    assert not verify_topological_obstruction(mgraph)["passes"]


def test_k7_fails_topological_verifier():
    report = verify_topological_obstruction(Graph.complete(7))
    assert not report["passes"] and report["not_in_class"]


def test_g5_is_topological_but_not_minor_order():
    g5 = builtin("G5")
    assert verify_topological_obstruction(g5)["passes"]
    report = verify_minor_obstruction(g5)
    assert not report["passes"]
    assert any(c["status"] == "NonToroidal" for c in report["contractions"])


def test_split_round_trip():
    rng = random.Random(16)
    for name in ("G1", "G2", "G3"):
        g = builtin(name)
        ops = list(all_splits(g))
        for op in rng.sample(ops, min(5, len(ops))):
            child = apply_split(g, op)
            assert child.n == g.n + 1 and child.m == g.m + 1
            assert min(child.degree(v) for v in child.vertices) >= 3
            new = max(child.vertices)
            restored = child.contract_edge(op.vertex, new)
            assert canonical_form(restored) == canonical_form(g)


def test_split_validation():
    g = Graph.complete(5)
    with pytest.raises(GraphInputError):
        apply_split(g, SplitOperation(0, frozenset({1}), frozenset({2, 3, 4})))
    with pytest.raises(GraphInputError):
        apply_split(g, SplitOperation(0, frozenset({1, 2}), frozenset({2, 3, 4})))


def test_split_class_check_agrees_with_minor_search():
    # splitting the shared vertex of G2 can create a K3,3; the class gate
    # must agree with the independent brute-force minor search either way
    from toroidal import find_minor

    k33 = Graph.complete_bipartite(3, 3)
    g = builtin("G2")
    seen_nonfree = False
    for op in list(all_splits(g))[:60]:
        child = apply_split(g, op)
        free = is_k33_free(child)
        assert free == (find_minor(child, k33) is None)
        seen_nonfree = seen_nonfree or not free
    assert seen_nonfree


def test_enumerate_splits_empty_seeds():
    assert enumerate_splits([]) == []


def test_enumerate_splits_k5_filters_everything(k5):
    assert enumerate_splits([k5]) == []


def test_is_topological_obstruction_quick_paths(k4, mgraph):
    assert not is_topological_obstruction(k4)  # toroidal
    assert not is_topological_obstruction(Graph.path(3))  # degree too low
    assert not is_topological_obstruction(mgraph)
    assert is_topological_obstruction(builtin("G1"))


def test_all_catalog_obstructions_nontoroidal():
    for name in TOPOLOGICAL_OBSTRUCTION_NAMES:
        assert decide_toroidal(builtin(name)).status == "NonToroidal"
