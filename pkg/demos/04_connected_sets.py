#!/usr/bin/env python3
"""
Connected vertex sets of an undirected graph.

The same include/exclude recursion, without convexity, lists every
connected induced subgraph. Orienting a bipartite graph from one side to
the other makes every subset convex, so its cc-sets are exactly the
connected sets of the graph.
"""

from ccenum import (
    Collector,
    brute_connected,
    count_connected,
    enumerate_cc,
    enumerate_connected,
    gen_random_bipartite_graph,
    orient_bipartite,
    parse_undirected,
)

star = parse_undirected("4 3\n0 1\n0 2\n0 3\n")
c = Collector()
enumerate_connected(star, c)
print("star with centre 0:", [s.to_list() for s in c])
print("oracle agrees:", sorted(s.to_list() for s in c) == brute_connected(star).as_lists())

g = gen_random_bipartite_graph(10, 0.3, 4)
d = orient_bipartite(g)
cc, conn = Collector(), Collector()
enumerate_cc(d, cc)
enumerate_connected(g, conn)
print(f"\nbipartite graph, {g.m} edges: {len(conn)} connected sets, {len(cc)} cc-sets after orienting")
print("same family:", set(cc) == set(conn))

# A cycle on n vertices has n(n-1)+1 connected sets.
for n in range(3, 11):
    ring = parse_undirected(f"{n} {n}\n" + "\n".join(f"{i} {(i + 1) % n}" for i in range(n)))
    print(f"  cycle C{n}: {count_connected(ring)} connected sets")
