"""Planarity with Kuratowski witness extraction.

The yes/no test is delegated to networkx's left-right planarity check; the
independent genus oracle cross-checks it in the test suite.  Witnesses are
lifted into :class:`SubdivisionWitness` form by classifying an edge-minimal
non-planar subgraph (always a K5- or K3,3-subdivision) by corner degrees.
"""

from __future__ import annotations

import networkx as nx

from .errors import ClassViolationError, GraphInputError
from .graphs import Graph
from .subdivisions import (
    K5_PATTERN,
    K33_PATTERN,
    SubdivisionWitness,
    find_subdivision,
)

_planar_cache: dict[Graph, bool] = {}


def _to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    return G


def is_planar(g: Graph) -> bool:
    if g.m < 9:
        return True
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    cached = _planar_cache.get(g)
    if cached is None:
        cached = nx.check_planarity(_to_nx(g), counterexample=False)[0]
        if len(_planar_cache) < 200000:
            _planar_cache[g] = cached
    return cached


def _prune_low_degree(g: Graph) -> Graph:
    while True:
        drop = [v for v in g.vertices if g.degree(v) <= 1]
        if not drop:
            return g
        g = Graph((v for v in g.vertices if v not in drop),
                  (e for e in g.edges if e[0] not in drop and e[1] not in drop))


def _minimalize_nonplanar(g: Graph) -> Graph:
    """Shrink to an edge-minimal non-planar subgraph (a Kuratowski
    subdivision)."""
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            smaller = _prune_low_degree(g.delete_edge(*e))
            if not is_planar(smaller):
                g = smaller
                changed = True
                break
    return _prune_low_degree(g)


def _classify_kuratowski(sub: Graph) -> SubdivisionWitness | None:
    """Build a witness from an edge-minimal non-planar subgraph; None if the
    subgraph does not have the expected corner structure."""
    corners = sorted(v for v in sub.vertices if sub.degree(v) >= 3)
    degs = sorted(sub.degree(v) for v in corners)
    if degs == [4, 4, 4, 4, 4]:
        pattern = K5_PATTERN
    elif degs == [3, 3, 3, 3, 3, 3]:
        pattern = K33_PATTERN
    else:
        return None
    cset = set(corners)
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    seen_starts: set[tuple[int, int]] = set()
    for c in corners:
        for w in sub.neighbors(c):
            if (c, w) in seen_starts:
                continue
            path = [c, w]
            prev, cur = c, w
            while cur not in cset:
                ns = [x for x in sub.neighbors(cur) if x != prev]
                if len(ns) != 1:
                    return None
                prev, cur = cur, ns[0]
                path.append(cur)
            seen_starts.add((c, w))
            seen_starts.add((cur, prev))
            a, b = path[0], path[-1]
            if a == b:
                return None
            key = (a, b) if a < b else (b, a)
            if key in paths:
                return None
            paths[key] = tuple(path) if a < b else tuple(reversed(path))

    if pattern == K5_PATTERN:
        if len(paths) != 10:
            return None
        corner_map = {i: corners[i] for i in range(5)}
    else:
        if len(paths) != 9:
            return None
        # recover the bipartition from path adjacency
        c0 = corners[0]
        adj_pairs = set(paths)
        side_a = [c0] + [
            c for c in corners[1:]
            if (min(c0, c), max(c0, c)) not in adj_pairs
        ]
        side_b = [c for c in corners if c not in side_a]
        if len(side_a) != 3 or len(side_b) != 3:
            return None
        corner_map = {i: side_a[i] for i in range(3)}
        corner_map.update({3 + i: side_b[i] for i in range(3)})

    inv = {v: p for p, v in corner_map.items()}
    branch_paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for (a, b), path in paths.items():
        p, q = inv[a], inv[b]
        if p > q:
            p, q = q, p
            path = tuple(reversed(path))
        branch_paths[(p, q)] = path
    return SubdivisionWitness(pattern, corner_map, branch_paths)


def kuratowski_witness(g: Graph) -> SubdivisionWitness:
    """A TK5 or TK3,3 inside the non-planar graph ``g``."""
    if is_planar(g):
        raise GraphInputError("kuratowski_witness needs a non-planar graph")
    ok, counter = nx.check_planarity(_to_nx(g), counterexample=True)
    assert not ok
    sub = Graph(counter.nodes(), counter.edges())
    witness = _classify_kuratowski(sub)
    if witness is None:
        # the counterexample should already be edge-minimal; shrink if not
        witness = _classify_kuratowski(_minimalize_nonplanar(sub))
    if witness is not None:
        try:
            witness.validate(g)
            return witness
        except ValueError:
            pass
    # fall back to exhaustive search; one of the two must exist
    witness = find_subdivision(g, K33_PATTERN) or find_subdivision(g, K5_PATTERN)
    if witness is None:
        raise AssertionError("non-planar graph without a Kuratowski subdivision")
    return witness


def find_k5_subdivision(g: Graph) -> SubdivisionWitness:
    """A TK5 witness in a non-planar graph believed to be K3,3-free.

    If extraction produces a TK3,3 instead, the input is outside the class
    and a :class:`ClassViolationError` carrying that witness is raised.
    """
    witness = kuratowski_witness(g)
    if witness.pattern == K33_PATTERN:
        raise ClassViolationError(
            "graph contains a K3,3-subdivision", witness=witness
        )
    return witness
