#!/usr/bin/env python3
"""
How many cc-sets can an n-vertex DAG have?

A directed path has the fewest, n(n+1)/2. The complete bipartite DAG with
parts as equal as possible has the most, f(n) = 2^n + n + 1 - d_n. Both
bounds are checked here by counting, for growing n.
"""

import time

from ccenum import count_cc, gen_kpq, gen_path, predict

print(f"{'n':>3} {'path':>6} {'lower':>6} {'K(a,b)':>10} {'f(n)':>10} {'secs':>6}")
for n in range(2, 21, 2):
    t0 = time.perf_counter()
    top = count_cc(gen_kpq((n + 1) // 2, n // 2))
    secs = time.perf_counter() - t0
    p = predict(n)
    print(f"{n:>3} {count_cc(gen_path(n)):>6} {p.lower:>6} {top:>10} {p.upper:>10} {secs:>6.2f}")

# Unbalanced parts fall short of the bound.
n = 12
print(f"\nn={n}, every split of the two parts:")
for a in range(1, n):
    print(f"  K({a},{n - a}): {count_cc(gen_kpq(a, n - a))}")
print(f"  bound: {predict(n).upper}")
