"""Subdivision and minor containment by exhaustive backtracking.

These searches are complete on the desk-scale graphs this package targets
(around 16 vertices).  ``find_subdivision`` models a pattern graph inside a
host via an injective corner map plus internally disjoint branch paths;
``find_minor`` searches for disjoint connected branch sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GraphInputError
from .graphs import Graph, _norm_edge
from .isomorphism import automorphisms

# Pattern vertex conventions: K5 = 0..4; K3,3 = {0,1,2} vs {3,4,5};
# M = two K5s sharing the central edge 0-1, triangles {2,3,4} and {5,6,7}.
K5_PATTERN = "K5"
K33_PATTERN = "K3,3"
M_PATTERN = "M"


def pattern_graph(name: str) -> Graph:
    if name == K5_PATTERN:
        return Graph.complete(5)
    if name == K33_PATTERN:
        return Graph.complete_bipartite(3, 3)
    if name == M_PATTERN:
        edges = list(itertools.combinations((0, 1, 2, 3, 4), 2))
        edges += [e for e in itertools.combinations((0, 1, 5, 6, 7), 2) if e != (0, 1)]
        return Graph(range(8), edges)
    raise GraphInputError(f"unknown pattern {name!r}")


@dataclass(frozen=True, eq=False)
class SubdivisionWitness:
    """A model of a pattern graph inside a host: corners plus branch paths.

    ``corner_map`` sends pattern vertices to distinct host vertices and
    ``branch_paths`` sends each pattern edge (u, v) with u < v to the host
    path from corner_map[u] to corner_map[v].  Branch paths are internally
    disjoint from each other and from every corner.
    """

    pattern: str
    corner_map: dict[int, int]
    branch_paths: dict[tuple[int, int], tuple[int, ...]]

    def pattern_graph(self) -> Graph:
        if self.pattern in (K5_PATTERN, K33_PATTERN, M_PATTERN):
            return pattern_graph(self.pattern)
        # ad-hoc patterns are recorded by their corner/path structure
        return Graph(self.corner_map.keys(), self.branch_paths.keys())

    @property
    def corners(self) -> frozenset[int]:
        return frozenset(self.corner_map.values())

    def subgraph_edges(self) -> set[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for path in self.branch_paths.values():
            out.update(_norm_edge(a, b) for a, b in zip(path, path[1:]))
        return out

    def as_subgraph(self) -> Graph:
        return Graph(self.corners, self.subgraph_edges())

    def validate(self, g: Graph) -> None:
        """Raise ValueError unless this witness satisfies its invariants
        inside ``g``."""
        pat = self.pattern_graph()
        if set(self.corner_map) != set(pat.vertices):
            raise ValueError("corner map keys do not match the pattern")
        if len(set(self.corner_map.values())) != pat.n:
            raise ValueError("corner map is not injective")
        for p, v in self.corner_map.items():
            if not g.has_vertex(v):
                raise ValueError(f"corner image {v} missing from host")
            if g.degree(v) < pat.degree(p):
                raise ValueError(f"host degree of corner {v} below pattern degree")
        if set(self.branch_paths) != set(pat.edges):
            raise ValueError("branch path keys do not match the pattern edges")
        corners = self.corners
        seen_internal: set[int] = set()
        for (p, q), path in self.branch_paths.items():
            if path[0] != self.corner_map[p] or path[-1] != self.corner_map[q]:
                raise ValueError(f"path for pattern edge {(p, q)} has wrong endpoints")
            if len(set(path)) != len(path):
                raise ValueError(f"path for pattern edge {(p, q)} is not simple")
            for a, b in zip(path, path[1:]):
                if not g.has_edge(a, b):
                    raise ValueError(f"path step {(a, b)} is not a host edge")
            for w in path[1:-1]:
                if w in corners:
                    raise ValueError(f"path for {(p, q)} passes through corner {w}")
                if w in seen_internal:
                    raise ValueError(f"internal vertex {w} reused")
                seen_internal.add(w)


def _symmetry_constraints(pat: Graph, name: str | None) -> list[tuple[int, int]] | None:
    """Pairs (p, q) of pattern vertices whose host images must satisfy
    image[p] < image[q]; picks one corner assignment per pattern-symmetry
    orbit for the patterns we search for constantly.  None means no cheap
    constraint system is known and the caller falls back to a leaf check."""
    if pat.m == pat.n * (pat.n - 1) // 2:  # complete pattern, Aut = S_n
        vs = pat.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
    if name == K33_PATTERN:
        return [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3)]
    if name == M_PATTERN:
        return [(0, 1), (2, 3), (3, 4), (5, 6), (6, 7), (2, 5)]
    return None


def _assignment_is_canonical(
    corner_of: dict[int, int], pvs: list[int], auts: list[dict[int, int]]
) -> bool:
    """Leaf fallback: keep one corner assignment per pattern-automorphism
    orbit (used for custom patterns only)."""
    images = tuple(corner_of[p] for p in pvs)
    for a in auts:
        permuted = tuple(corner_of[a[p]] for p in pvs)
        if permuted < images:
            return False
    return True


def find_subdivision(
    g: Graph,
    h: Graph | str,
    require_corners: dict[int, int] | None = None,
) -> SubdivisionWitness | None:
    """Search for an h-subdivision in g; None when there is none.

    ``h`` is a pattern name or a graph with minimum degree >= 3.
    ``require_corners`` pins chosen pattern vertices to host vertices.
    """
    name = h if isinstance(h, str) else None
    pat = pattern_graph(h) if isinstance(h, str) else h
    if pat.n and min(pat.degree(v) for v in pat.vertices) < 3:
        raise GraphInputError("subdivision pattern needs minimum degree 3")
    if g.n < pat.n or g.m < pat.m:
        return None
    require_corners = dict(require_corners or {})
    for p, v in require_corners.items():
        if not pat.has_vertex(p) or not g.has_vertex(v):
            raise GraphInputError("bad corner pin")

    pvs = list(pat.vertices)
    pinned = set(require_corners)
    # symmetry reduction: ordering constraints for the stock patterns, a
    # leaf-time automorphism check otherwise; pins disable both
    constraints = _symmetry_constraints(pat, name) if not pinned else []
    auts = (
        automorphisms(pat)
        if constraints is None and not pinned
        else [{v: v for v in pvs}]
    )
    # high-degree pattern vertices first: they have the fewest host candidates
    order = sorted(pvs, key=lambda p: (p not in pinned, -pat.degree(p), p))
    host_sorted = sorted(g.vertices, key=lambda v: (-g.degree(v), v))

    def candidates(p: int, taken: set[int]):
        if p in require_corners:
            v = require_corners[p]
            if v not in taken and g.degree(v) >= pat.degree(p):
                yield v
            return
        for v in host_sorted:
            if v not in taken and g.degree(v) >= pat.degree(p):
                yield v

    def route_all(corner_of: dict[int, int]) -> dict | None:
        corners = set(corner_of.values())
        edges = sorted(pat.edges)
        paths: dict[tuple[int, int], tuple[int, ...]] = {}
        used: set[int] = set()

        def paths_between(a: int, b: int):
            """DFS over simple a-b paths avoiding corners and used internals."""
            target_first = sorted(
                g.neighbors(a), key=lambda w: (w != b, -g.degree(w), w)
            )
            stack = [(a, iter(target_first), [a])]
            onpath = {a}
            while stack:
                v, it, path = stack[-1]
                advanced = False
                for w in it:
                    if w == b:
                        yield tuple(path + [b])
                        continue
                    if w in onpath or w in used or w in corners:
                        continue
                    nxt = sorted(g.neighbors(w), key=lambda x: (x != b, -g.degree(x), x))
                    stack.append((w, iter(nxt), path + [w]))
                    onpath.add(w)
                    advanced = True
                    break
                if not advanced:
                    stack.pop()
                    onpath.discard(v)

        def route(i: int) -> bool:
            if i == len(edges):
                return True
            p, q = edges[i]
            a, b = corner_of[p], corner_of[q]
            for path in paths_between(a, b):
                internal = path[1:-1]
                paths[(p, q)] = path
                used.update(internal)
                if route(i + 1):
                    return True
                used.difference_update(internal)
                del paths[(p, q)]
            return False

        return dict(paths) if route(0) else None

    def constraints_ok(corner_of: dict[int, int]) -> bool:
        for p, q in constraints or ():
            if p in corner_of and q in corner_of and corner_of[p] >= corner_of[q]:
                return False
        return True

    def assign(i: int, corner_of: dict[int, int], taken: set[int]):
        if i == len(order):
            if constraints is None and not _assignment_is_canonical(
                corner_of, pvs, auts
            ):
                return None
            routed = route_all(corner_of)
            if routed is not None:
                return SubdivisionWitness(name or "custom", dict(corner_of), routed)
            return None
        p = order[i]
        for v in candidates(p, taken):
            corner_of[p] = v
            if constraints_ok(corner_of):
                taken.add(v)
                found = assign(i + 1, corner_of, taken)
                if found is not None:
                    return found
                taken.discard(v)
            del corner_of[p]
        return None

    witness = assign(0, {}, set())
    if witness is not None:
        witness.validate(g)
    return witness


def has_subdivision(g: Graph, h: Graph | str) -> bool:
    return find_subdivision(g, h) is not None


def find_minor(g: Graph, h: Graph) -> dict[int, frozenset[int]] | None:
    """Branch-set witness that h is a minor of g, or None.

    The witness maps each h-vertex to a connected set of g-vertices; the
    sets are disjoint and adjacent in g wherever h has an edge.
    """
    if h.n == 0:
        return {}
    if min(h.degree(v) for v in h.vertices) < 1:
        raise GraphInputError("minor pattern needs minimum degree 1")
    if g.n < h.n or g.m < h.m:
        return None

    gverts = list(g.vertices)
    gi = {v: i for i, v in enumerate(gverts)}
    n = len(gverts)
    adj = [0] * n
    for u, v in g.edges:
        adj[gi[u]] |= 1 << gi[v]
        adj[gi[v]] |= 1 << gi[u]

    def nbr_mask(mask: int) -> int:
        out = 0
        m = mask
        while m:
            b = m & -m
            out |= adj[b.bit_length() - 1]
            m ^= b
        return out & ~mask

    hvs = sorted(h.vertices, key=lambda p: (-h.degree(p), p))
    hdeg = {p: h.degree(p) for p in h.vertices}
    placed: dict[int, int] = {}  # h-vertex -> branch mask

    def connected_subsets(allowed: int, max_size: int):
        """All connected subsets of ``allowed``, each enumerated exactly once
        (anchored at its lowest bit, extensions exclude previously tried
        branches)."""
        m = allowed
        while m:
            seed = m & -m
            m ^= seed
            pool = allowed & ~(seed - 1) & ~seed  # vertices above the seed

            def grow(cur: int, ext: int, forb: int):
                yield cur
                if bin(cur).count("1") >= max_size:
                    return
                tried = 0
                e = ext
                while e:
                    b = e & -e
                    e ^= b
                    sub_forb = forb | tried
                    sub_ext = (
                        (e | (nbr_mask(cur | b) & pool)) & ~(cur | b) & ~sub_forb
                    )
                    yield from grow(cur | b, sub_ext, sub_forb)
                    tried |= b

            yield from grow(seed, nbr_mask(seed) & pool, 0)

    def place(i: int, used: int) -> bool:
        if i == len(hvs):
            return True
        p = hvs[i]
        need_rest = len(hvs) - i - 1
        free = ((1 << n) - 1) & ~used
        max_size = n - bin(used).count("1") - need_rest
        if max_size < 1:
            return False
        unplaced_nbrs = sum(1 for q in h.neighbors(p) if q not in placed)
        for s in connected_subsets(free, max_size):
            outs = nbr_mask(s)
            # disjoint future branches each need a distinct neighbor of s
            if bin(outs & free & ~s).count("1") < unplaced_nbrs:
                continue
            ok = True
            for q, mask in placed.items():
                if h.has_edge(p, q) and not (outs & mask):
                    ok = False
                    break
            if ok:
                placed[p] = s
                if place(i + 1, used | s):
                    return True
                del placed[p]
        return False

    if place(0, 0):
        def unmask(mask: int) -> frozenset[int]:
            return frozenset(gverts[i] for i in range(n) if (mask >> i) & 1)

        return {p: unmask(mask) for p, mask in placed.items()}
    return None


def has_minor(g: Graph, h: Graph) -> bool:
    return find_minor(g, h) is not None
