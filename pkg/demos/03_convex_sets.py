#!/usr/bin/env python3
"""
All convex sets, by repeatedly peeling off sources and sinks.

Dropping a source or sink from a convex set keeps it convex, so the whole
family hangs off the full vertex set. PeelState exposes the degree
bookkeeping behind a single branch of that search.
"""

from ccenum import (
    Collector,
    PeelState,
    count_convex,
    enumerate_convex,
    gen_kpq,
    gen_path,
    gen_random_dag,
    is_convex,
    peel_step,
    restore_step,
)

d = gen_path(4)
c = Collector()
enumerate_convex(d, c, include_empty=True)
print("path 0->1->2->3, convex sets in output order:")
print("  ", [s.to_list() for s in c])

# In a bipartite orientation there are no paths of length two, so every
# nonempty subset is convex.
for a, b in [(2, 2), (3, 5), (7, 8)]:
    print(f"K({a},{b}): {count_convex(gen_kpq(a, b))} convex sets, 2^{a + b}-1 = {2 ** (a + b) - 1}")

# One peeling branch by hand.
d = gen_random_dag(8, 0.35, 11)
state = PeelState(d)
print(f"\nrandom DAG, arcs {d.arcs()}")
records = []
while state.candidates():
    s = state.candidates()[0]
    records.append(peel_step(state, s))
    left = state.live
    print(f"  peel {s}: left {left.to_list()}, convex={is_convex(d, left) if left else '-'}")
for rec in reversed(records):
    restore_step(state, rec)
print("restored:", state.live.to_list(), "degrees consistent:", state.consistent())
