"""The obstruction catalog and its verification and regeneration machinery.

Four graphs are the minor-order obstructions for the torus within the
K3,3-free class; eleven are the topological obstructions, the extra seven
arising from vertex splits of the first four.  ``verify_minor_obstruction``
and ``verify_topological_obstruction`` check the defining minimality
properties edge by edge, and ``enumerate_splits`` regenerates the full
topological list from the minor-order seeds.

M and G4 are constructed from their defining recipes; the remaining
catalog members are versioned graph6 data validated by the verifiers.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources

from .errors import GraphInputError
from .graphs import Graph, from_graph6, to_graph6
from .isomorphism import canonical_form
from .structure import is_k33_free, m_graph
from .toroidality import NON_TOROIDAL, NOT_IN_CLASS, TOROIDAL, decide_toroidal

MINOR_ORDER = "minor-order"
TOPOLOGICAL_ONLY = "topological-only"
REFERENCE = "reference"

MINOR_OBSTRUCTION_NAMES = ("G1", "G2", "G3", "G4")
TOPOLOGICAL_OBSTRUCTION_NAMES = tuple(f"G{i}" for i in range(1, 12))


@dataclass(frozen=True, eq=False)
class ObstructionRecord:
    name: str
    kind: str
    graph: Graph

    def validate(self) -> None:
        if min(self.graph.degree(v) for v in self.graph.vertices) < 3:
            raise GraphInputError(f"{self.name}: minimum degree below 3")
        if self.name.startswith("G") and not is_k33_free(self.graph):
            raise GraphInputError(f"{self.name}: contains a K3,3-subdivision")


def make_g4() -> Graph:
    """Substitute K5-e for the central edge of the M-graph: delete the
    central edge xy and glue in a K5 minus one edge, identifying the ends
    of the removed edge with x and y."""
    g = m_graph().delete_edge(0, 1)
    new = (0, 1, 8, 9, 10)
    extra = [e for e in itertools.combinations(new, 2) if e != (0, 1)]
    return Graph(list(g.vertices) + [8, 9, 10], list(g.edges) + extra)


def _load_catalog() -> dict[str, ObstructionRecord]:
    data = resources.files("toroidal.data")
    manifest = json.loads((data / "catalog.json").read_text())
    lines = (data / "catalog.g6").read_text().splitlines()
    records: dict[str, ObstructionRecord] = {}
    for entry, line in zip(manifest, lines):
        records[entry["name"]] = ObstructionRecord(
            entry["name"], entry["kind"], from_graph6(line)
        )
    if len(records) != len(manifest) or len(manifest) != len(lines):
        raise GraphInputError("catalog manifest and graph6 data disagree")
    # M and G4 come from their constructions; stored copies must agree
    for name, built in (("M", m_graph()), ("G4", make_g4())):
        if name in records and canonical_form(records[name].graph) != canonical_form(
            built
        ):
            raise GraphInputError(f"stored {name} disagrees with its construction")
        records[name] = ObstructionRecord(name, records[name].kind, built)
    for rec in records.values():
        rec.validate()
    return records


_catalog_cache: dict[str, ObstructionRecord] | None = None


def catalog() -> dict[str, ObstructionRecord]:
    global _catalog_cache
    if _catalog_cache is None:
        _catalog_cache = _load_catalog()
    return _catalog_cache


def builtin(name: str) -> Graph:
    """A catalog graph by name: K5, K3,3, M, or G1..G11."""
    try:
        return catalog()[name].graph
    except KeyError:
        raise GraphInputError(f"unknown catalog name {name!r}") from None


# -- minimality verification -------------------------------------------------


def _deletion_outcomes(g: Graph):
    for e in g.edges:
        yield e, decide_toroidal(g.delete_edge(*e)).status


def _contraction_outcomes(g: Graph):
    for e in g.edges:
        yield e, decide_toroidal(g.contract_edge(*e)).status


def verify_topological_obstruction(g: Graph) -> dict:
    """Report on: minimum degree 3, non-toroidal, and every single-edge
    deletion toroidal.  NotInClass anywhere marks the report failed."""
    min_degree_ok = bool(g.vertices) and min(g.degree(v) for v in g.vertices) >= 3
    status = decide_toroidal(g).status
    deletions = [
        {"edge": list(e), "status": s} for e, s in _deletion_outcomes(g)
    ]
    not_in_class = status == NOT_IN_CLASS or any(
        d["status"] == NOT_IN_CLASS for d in deletions
    )
    passes = (
        min_degree_ok
        and not not_in_class
        and status == NON_TOROIDAL
        and all(d["status"] == TOROIDAL for d in deletions)
    )
    return {
        "min_degree_ok": min_degree_ok,
        "status": status,
        "deletions": deletions,
        "not_in_class": not_in_class,
        "passes": passes,
    }


def verify_minor_obstruction(g: Graph) -> dict:
    """Topological report plus the contraction clause: every single-edge
    contraction must also be toroidal."""
    report = verify_topological_obstruction(g)
    contractions = [
        {"edge": list(e), "status": s} for e, s in _contraction_outcomes(g)
    ]
    report["contractions"] = contractions
    report["not_in_class"] = report["not_in_class"] or any(
        c["status"] == NOT_IN_CLASS for c in contractions
    )
    report["passes"] = (
        report["passes"]
        and not report["not_in_class"]
        and all(c["status"] == TOROIDAL for c in contractions)
    )
    return report


def is_topological_obstruction(g: Graph) -> bool:
    """Early-exit version of the topological report, for enumeration."""
    if not g.vertices or min(g.degree(v) for v in g.vertices) < 3:
        return False
    if decide_toroidal(g).status != NON_TOROIDAL:
        return False
    for e in g.edges:
        if decide_toroidal(g.delete_edge(*e)).status != TOROIDAL:
            return False
    return True


# -- vertex splitting and the closure ----------------------------------------


@dataclass(frozen=True)
class SplitOperation:
    """Replace vertex by an edge v-v', dividing its neighbors between the
    two ends; both parts need two or more neighbors so minimum degree 3
    survives."""

    vertex: int
    part_kept: frozenset[int]
    part_moved: frozenset[int]

    def validate(self, g: Graph) -> None:
        nbrs = set(g.neighbors(self.vertex))
        if self.part_kept | self.part_moved != nbrs or (
            self.part_kept & self.part_moved
        ):
            raise GraphInputError("split parts must partition the neighborhood")
        if len(self.part_kept) < 2 or len(self.part_moved) < 2:
            raise GraphInputError("both split parts need at least two neighbors")


def apply_split(g: Graph, op: SplitOperation) -> Graph:
    op.validate(g)
    v = op.vertex
    new = max(g.vertices) + 1
    edges = [e for e in g.edges if v not in e]
    edges += [(v, w) for w in op.part_kept]
    edges += [(new, w) for w in op.part_moved]
    edges.append((v, new))
    return Graph(list(g.vertices) + [new], edges)


def all_splits(g: Graph):
    """Every SplitOperation of g, one per unordered neighborhood bipartition."""
    for v in g.vertices:
        nbrs = g.neighbors(v)
        if len(nbrs) < 4:
            continue
        anchor, rest = nbrs[0], nbrs[1:]
        for r in range(1, len(rest)):
            for moved in itertools.combinations(rest, r):
                kept = frozenset(nbrs) - frozenset(moved)
                if len(kept) < 2 or len(moved) < 2:
                    continue
                yield SplitOperation(v, kept, frozenset(moved))


def enumerate_splits(
    seeds, ceiling: int = 16, log=None
) -> list[Graph]:
    """Closure of the seeds under vertex splits, keeping only K3,3-free
    topological obstructions; deduplicated by canonical form.

    Splitting only verified obstructions loses nothing: a failed deletion
    in any graph survives (as a minor) in all of its splits, so every
    split ancestor of an obstruction is itself an obstruction.
    """
    accepted: dict[str, Graph] = {}
    frontier: list[Graph] = []
    for seed in seeds:
        key = canonical_form(seed)
        if key in accepted:
            continue
        if is_k33_free(seed) and is_topological_obstruction(seed):
            accepted[key] = seed.normalized()
            frontier.append(seed)
    rejected: set[str] = set()
    while frontier:
        g = frontier.pop(0)
        for op in all_splits(g):
            child = apply_split(g, op)
            if child.n > ceiling:
                continue
            key = canonical_form(child)
            if key in accepted or key in rejected:
                continue
            if is_k33_free(child) and is_topological_obstruction(child):
                accepted[key] = child.normalized()
                frontier.append(child)
                if log:
                    log(f"obstruction found: n={child.n} m={child.m}")
            else:
                rejected.add(key)
    out = sorted(accepted.values(), key=lambda h: (h.n, h.m, to_graph6(h)))
    return out
