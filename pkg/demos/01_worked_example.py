#!/usr/bin/env python3
"""
Connected convex sets of a five-vertex DAG, step by step.

The digraph has arcs 0->1->2->4 and 0->3->4. We list its connected convex
sets, watch the recursion that produces them, and compare with the plain
convex and connected families.
"""

from ccenum import (
    Collector,
    EnumFrame,
    brute_convex,
    enumerate_cc,
    enumerate_convex,
    parse_digraph,
    subroutine_b,
    underlying_graph,
    count_connected,
)

d = parse_digraph("""
5 5
# the small example: a diamond with a long left side
0 1
1 2
0 3
2 4
3 4
""")
print(f"{d.n} vertices, {d.m} arcs: {d.arcs()}")

# Every cc-set, in output order. Each start vertex i owns the sets whose
# lowest-ranked member is i, and the largest such set comes out first.
sets = Collector()
enumerate_cc(d, sets)
for s in sets:
    print("  ", s.to_list())
print(f"{len(sets)} connected convex sets")

# The recursive calls for start vertex 1: (X, Y) is the set built so far and
# the vertices still allowed to join it.
print("\ncalls under start vertex 1:")
frames = []
subroutine_b(EnumFrame.start(d.closure, 1), d.closure, None, frames.append)
for f in frames:
    print(f"   X={f.x.to_list()!s:<14} Y={f.y.to_list()}")

# {1, 3} is convex but falls apart into two pieces. {0, 4} is not even
# convex, since the path 0->3->4 leaves the set.
cv = Collector()
enumerate_convex(d, cv)
print(f"\nconvex sets: {len(cv)} (oracle says {len(brute_convex(d))})")
print("convex but disconnected:", [s.to_list() for s in cv if s not in set(sets)])
print(f"connected sets of the underlying graph: {count_connected(underlying_graph(d))}")
