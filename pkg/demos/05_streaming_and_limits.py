#!/usr/bin/env python3
"""
Streaming output, early stops, and the parallel merge.

Enumerators hand each set to a sink as soon as it is found. A sink that
returns False stops the run, and limit=k returns exactly the first k sets
of the full run, so asking for a few sets of a huge family is cheap.
"""

import time

from ccenum import Collector, count_cc, enumerate_cc, gen_kpq, gen_random_dag

big = gen_kpq(11, 11)

t0 = time.perf_counter()
first = Collector()
enumerate_cc(big, first, limit=5)
print(f"first 5 of {4_190_231:,} sets in {1e3 * (time.perf_counter() - t0):.1f} ms:")
for s in first:
    print("  ", s.to_list())


# A sink can decide on its own when to stop.
class UntilSize:
    def __init__(self, size):
        self.size, self.seen = size, 0

    def __call__(self, s):
        self.seen += 1
        return len(s) > self.size


stop = UntilSize(3)
enumerate_cc(big, stop)
print(f"\nstopped after {stop.seen} sets, at the first set of size <= 3")

# limit=k is always a prefix of the full run
d = gen_random_dag(12, 0.3, 7)
full = Collector()
enumerate_cc(d, full)
for k in (0, 1, 10, len(full)):
    part = Collector()
    enumerate_cc(d, part, limit=k)
    assert part.sets == full.sets[:k]
print(f"prefix law holds on a random DAG with {len(full)} cc-sets")

# Parallel mode buffers each start vertex and merges in order.
par = Collector()
enumerate_cc(d, par, workers=2)
print("parallel output identical to serial:", par.sets == full.sets)
print(f"count only, K(8,8): {count_cc(gen_kpq(8, 8)):,}")
