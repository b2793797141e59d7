"""Side-component structure of K5- and M-subdivisions.

A 2-connected graph with a TK5 and no TK3,3 decomposes into bridges of the
corner set, each spanning exactly two corners; bridges sharing a corner
pair form a side component.  A bridge touching three or more corners (or a
non-adjacent corner pair of an M pattern) certifies a K3,3-subdivision
instead.  The recursive K3,3-freeness test built on this decomposition is
the class gate for everything else in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GraphInputError, K33Found
from .graphs import BridgeOf, Graph, blocks, bridges_of
from .isomorphism import canonical_form
from .planarity import is_planar, kuratowski_witness
from .subdivisions import (
    K5_PATTERN,
    K33_PATTERN,
    M_PATTERN,
    SubdivisionWitness,
    find_subdivision,
    pattern_graph,
)


def m_graph() -> Graph:
    """The 8-vertex graph of two K5's sharing one edge; vertices 0 and 1
    are the degree-7 endpoints of the central edge."""
    return pattern_graph(M_PATTERN)


M_CENTRAL_EDGE = (0, 1)


@dataclass(frozen=True, eq=False)
class SideComponent:
    """Union of all bridges spanning one fixed pair of corners."""

    corners: tuple[int, int]
    pattern_edge: tuple[int, int]
    subgraph: Graph
    augmented: Graph
    bridges: tuple[BridgeOf, ...]

    @property
    def corner_edge_present(self) -> bool:
        return self.subgraph.has_edge(*self.corners)


@dataclass(frozen=True, eq=False)
class SideDecomposition:
    witness: SubdivisionWitness
    corner_set: frozenset[int]
    components: tuple[SideComponent, ...]

    def component(self, a: int, b: int) -> SideComponent:
        key = (a, b) if a < b else (b, a)
        for sc in self.components:
            if sc.corners == key:
                return sc
        raise KeyError(key)

    @property
    def central_component(self) -> SideComponent:
        """For an M decomposition, the component of the central edge."""
        if self.witness.pattern != M_PATTERN:
            raise GraphInputError("central component only exists for M patterns")
        a = self.witness.corner_map[M_CENTRAL_EDGE[0]]
        b = self.witness.corner_map[M_CENTRAL_EDGE[1]]
        return self.component(a, b)


def _junction_paths(bridge: BridgeOf, c1: int, c2: int, c3: int):
    """Three internally disjoint paths from a common internal junction to
    c1, c2, c3 inside the bridge, or None if the construction degenerates."""
    bg = bridge.as_graph()
    parent = {c1: None}
    queue = [c1]
    while queue:
        v = queue.pop(0)
        for w in bg.neighbors(v):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if c2 not in parent or c3 not in parent:
        return None

    def walk(v):
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path  # v .. c1

    p2 = walk(c2)
    on_p2 = {v: i for i, v in enumerate(p2)}
    v = c3
    tail3 = [v]
    while v not in on_p2:
        v = parent[v]
        tail3.append(v)
    z = v
    if z in (c1, c2, c3):
        return None
    i = on_p2[z]
    to_c2 = tuple(reversed(p2[: i + 1]))  # z .. c2
    to_c1 = tuple(p2[i:])  # z .. c1
    to_c3 = tuple(reversed(tail3))  # z .. c3
    if set(to_c2[1:]) & set(to_c3[1:]):
        return None
    return z, {c1: to_c1, c2: to_c2, c3: to_c3}


def _k33_from_bad_bridge(
    g: Graph, w: SubdivisionWitness, bridge: BridgeOf
) -> SubdivisionWitness:
    """Reroute through a bridge spanning >= 3 corners to exhibit a TK3,3;
    exhaustive search is the fallback when the construction collides."""
    pat = w.pattern_graph()
    inv = {v: p for p, v in w.corner_map.items()}
    corners_in_bridge = sorted(bridge.attachments)
    for c1, c2, c3 in itertools.combinations(corners_in_bridge, 3):
        built = _junction_paths(bridge, c1, c2, c3)
        if built is None:
            continue
        z, zpaths = built
        # two more corners adjacent (in the pattern) to all of c1, c2, c3
        candidates = [
            c
            for c in w.corners
            if c not in (c1, c2, c3)
            and all(pat.has_edge(inv[c], inv[ci]) for ci in (c1, c2, c3))
        ]
        for c4, c5 in itertools.combinations(sorted(candidates), 2):
            corner_map = {0: c1, 1: c2, 2: c3, 3: z, 4: c4, 5: c5}
            paths: dict[tuple[int, int], tuple[int, ...]] = {}
            for i, ci in enumerate((c1, c2, c3)):
                paths[(i, 3)] = tuple(reversed(zpaths[ci]))
                for j, cj in ((4, c4), (5, c5)):
                    pe = (inv[ci], inv[cj])
                    path = w.branch_paths.get(tuple(sorted(pe)))
                    if path is None:
                        break
                    if path[0] != ci:
                        path = tuple(reversed(path))
                    paths[(i, j)] = path
            if len(paths) != 9:
                continue
            witness = SubdivisionWitness(K33_PATTERN, corner_map, paths)
            try:
                witness.validate(g)
                return witness
            except ValueError:
                continue
    witness = find_subdivision(g, K33_PATTERN)
    if witness is None:
        raise AssertionError("bad bridge without a K3,3-subdivision")
    return witness


def decompose_by_corners(
    g: Graph, w: SubdivisionWitness, extract_witness: bool = True
) -> SideDecomposition:
    """Split a 2-connected host into side components of a TK5 or TM.

    Raises :class:`K33Found` when some bridge of the corner set spans three
    or more corners (or a non-adjacent corner pair, for M patterns); with
    ``extract_witness`` the exception carries a concrete TK3,3.
    """
    if w.pattern not in (K5_PATTERN, M_PATTERN):
        raise GraphInputError(f"cannot decompose by a {w.pattern} witness")
    pat = w.pattern_graph()
    inv = {v: p for p, v in w.corner_map.items()}
    corners = w.corners
    groups: dict[tuple[int, int], list[BridgeOf]] = {}
    for bridge in bridges_of(g, corners):
        att = sorted(bridge.attachments)
        if len(att) >= 3:
            raise K33Found(
                f"bridge spans corners {att}",
                witness=_k33_from_bad_bridge(g, w, bridge) if extract_witness else None,
            )
        if len(att) < 2:
            raise GraphInputError(
                "bridge with fewer than two attachments: host is not 2-connected"
            )
        a, b = att
        if not pat.has_edge(inv[a], inv[b]):
            raise K33Found(
                f"bridge spans non-adjacent corner pair {att}",
                witness=_k33_from_bad_bridge(g, w, bridge) if extract_witness else None,
            )
        groups.setdefault((a, b), []).append(bridge)

    components = []
    for pe in sorted(pat.edges):
        a, b = sorted((w.corner_map[pe[0]], w.corner_map[pe[1]]))
        brs = groups.pop((a, b), None)
        if brs is None:
            # cannot happen for a valid witness: its own branch path is a bridge
            raise AssertionError(f"no bridge for pattern edge {pe}")
        vs: set[int] = {a, b}
        es: set[tuple[int, int]] = set()
        for br in brs:
            vs |= br.internal | br.attachments
            es |= br.edges
        sub = Graph(vs, es)
        components.append(
            SideComponent(
                corners=(a, b),
                pattern_edge=pe,
                subgraph=sub,
                augmented=sub.add_edge(a, b),
                bridges=tuple(brs),
            )
        )
    assert not groups
    return SideDecomposition(w, frozenset(corners), tuple(components))


def m_side_components(g: Graph, w: SubdivisionWitness) -> SideDecomposition:
    """Side components of an M-subdivision, keyed by M-graph edges."""
    if w.pattern != M_PATTERN:
        raise GraphInputError("m_side_components needs an M witness")
    return decompose_by_corners(g, w)


def is_special(sc: SideComponent) -> bool:
    """Planar component, absent corner edge, non-planar augmentation."""
    return (
        not sc.corner_edge_present
        and is_planar(sc.subgraph)
        and not is_planar(sc.augmented)
    )


_k33_free_cache: dict[str, bool] = {}


def is_k33_free(g: Graph) -> bool:
    """True when g has no K3,3-subdivision (equivalently no K3,3-minor)."""
    return all(_block_k33_free(b) for b in blocks(g).blocks)


def _block_k33_free(block: Graph) -> bool:
    if block.m < 9:
        return True
    key = canonical_form(block)
    cached = _k33_free_cache.get(key)
    if cached is None:
        cached = _compute_block_k33_free(block)
        _k33_free_cache[key] = cached
    return cached


def _compute_block_k33_free(block: Graph) -> bool:
    if is_planar(block):
        return True
    w = kuratowski_witness(block)
    if w.pattern == K33_PATTERN:
        return False
    try:
        dec = decompose_by_corners(block, w, extract_witness=False)
    except K33Found:
        return False
    return all(is_k33_free(sc.augmented) for sc in dec.components)


def find_k33_subdivision(g: Graph) -> SubdivisionWitness | None:
    """A TK3,3 witness in g, or None when g is K3,3-free."""
    for block in blocks(g).blocks:
        if block.m < 9:
            continue
        witness = _block_k33_witness(block)
        if witness is not None:
            return witness
    return None


def _block_k33_witness(block: Graph) -> SubdivisionWitness | None:
    if is_planar(block):
        return None
    w = kuratowski_witness(block)
    if w.pattern == K33_PATTERN:
        return w
    try:
        dec = decompose_by_corners(block, w, extract_witness=True)
    except K33Found as exc:
        return exc.witness
    for sc in dec.components:
        inner = find_k33_subdivision(sc.augmented)
        if inner is None:
            continue
        a, b = sc.corners
        if sc.subgraph.has_edge(a, b):
            return inner  # augmentation added nothing: already a subgraph of block
        return _lift_through_augmentation(block, w, inner, a, b)
    return None


def _lift_through_augmentation(
    g: Graph,
    outer: SubdivisionWitness,
    inner: SubdivisionWitness,
    a: int,
    b: int,
) -> SubdivisionWitness:
    """Replace a use of the artificial corner edge ab in ``inner`` by a
    detour through a third corner of the outer witness."""
    uses_ab = None
    for key, path in inner.branch_paths.items():
        for i in range(len(path) - 1):
            if {path[i], path[i + 1]} == {a, b}:
                uses_ab = (key, i)
                break
        if uses_ab:
            break
    if uses_ab is None:
        return inner  # witness avoided the artificial edge altogether

    pat = outer.pattern_graph()
    inv = {v: p for p, v in outer.corner_map.items()}
    pa, pb = inv[a], inv[b]
    detour = None
    for c in sorted(outer.corners):
        pc = inv[c]
        if c in (a, b) or not (pat.has_edge(pa, pc) and pat.has_edge(pc, pb)):
            continue
        p1 = outer.branch_paths[tuple(sorted((pa, pc)))]
        if p1[0] != a:
            p1 = tuple(reversed(p1))
        p2 = outer.branch_paths[tuple(sorted((pc, pb)))]
        if p2[0] != c:
            p2 = tuple(reversed(p2))
        detour = p1 + p2[1:]  # a .. c .. b
        break
    if detour is None:
        raise AssertionError("no detour corner available for witness lifting")

    key, i = uses_ab
    path = inner.branch_paths[key]
    seg = detour if path[i] == a else tuple(reversed(detour))
    new_path = path[:i] + seg + path[i + 2 :]
    new_paths = dict(inner.branch_paths)
    new_paths[key] = new_path
    lifted = SubdivisionWitness(inner.pattern, dict(inner.corner_map), new_paths)
    lifted.validate(g)
    return lifted
