"""Decide torus embeddability for a tour of graphs and replay the
certificates that come back with each verdict."""

from toroidal import (
    Graph,
    builtin,
    decide_toroidal,
    verify_certificate,
)

samples = {
    "K4 (planar)": Graph.complete(4),
    "K5": Graph.complete(5),
    "M-graph (two K5s sharing an edge)": builtin("M"),
    "G3 (9-vertex minor obstruction)": builtin("G3"),
    "G4 (11-vertex minor obstruction)": builtin("G4"),
    "two disjoint K5s": Graph.complete(5).disjoint_union(Graph.complete(5)),
    "K3,3 (outside the class)": Graph.complete_bipartite(3, 3),
    "K7 (outside the class)": Graph.complete(7),
}

for label, g in samples.items():
    verdict = decide_toroidal(g)
    replay = verify_certificate(g, verdict)
    print(f"{label:38s} n={g.n:2d} m={g.m:2d}  ->  {verdict.status}/{verdict.case}"
          f"   certificate replays: {replay}")
    if verdict.tk5 is not None:
        corners = sorted(verdict.tk5.corners)
        bad = [r.corners for r in verdict.components if not r.augmented_planar]
        print(f"    TK5 corners {corners}; non-planar augmented components: {bad or 'none'}")
    if verdict.tm is not None:
        print(f"    TM corners {sorted(verdict.tm.corners)}; central pair "
              f"{(verdict.tm.corner_map[0], verdict.tm.corner_map[1])}")
    if verdict.k33 is not None:
        print(f"    TK3,3 witness corners {sorted(verdict.k33.corners)}")

print()
print("A certificate is data, not trust: tamper with one and the replay fails.")
import dataclasses

g = Graph.complete(5)
v = decide_toroidal(g)
forged = dataclasses.replace(v, status="NonToroidal")
print(f"forged K5 verdict replays: {verify_certificate(g, forged)}")
