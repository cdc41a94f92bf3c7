"""Instance families and closed-form cc-set counts.

Random instances come from SplitMix64 (Steele, Lea & Flood, 2014) so a
given seed produces the same graph in any language that follows these
rules:

* ``next()`` is the standard SplitMix64 step on a 64-bit state that starts
  at ``seed mod 2**64``;
* ``uniform()`` is ``(next() >> 11) * 2**-53``, a float in ``[0, 1)``;
* ``below(k)`` is ``next() % k``;
* shuffles are Fisher-Yates from the last position down, swapping
  position ``i`` with ``below(i + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Digraph, UndirectedGraph

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next() >> 11) * 2.0**-53

    def below(self, k: int) -> int:
        return self.next() % k

    def permutation(self, n: int) -> list[int]:
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        return perm


def _check_density(density: float) -> None:
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")


def gen_kpq(p: int, q: int) -> Digraph:
    """Complete bipartite digraph: sources ``0..p-1``, every arc to ``p..p+q-1``."""
    if p < 1 or q < 1:
        raise ValueError("both parts need at least one vertex")
    return Digraph.from_arcs(p + q, ((u, v) for u in range(p) for v in range(p, p + q)))


def gen_extremal(n: int) -> Digraph:
    """The balanced complete bipartite digraph on ``n >= 2`` vertices."""
    return gen_kpq((n + 1) // 2, n // 2)


def gen_path(n: int) -> Digraph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Digraph.from_arcs(n, ((i, i + 1) for i in range(n - 1)))


def gen_random_dag(n: int, density: float, seed: int) -> Digraph:
    """Random DAG: shuffle a hidden topological order, then keep each forward pair
    independently with probability ``density`` (pairs visited row by row)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_density(density)
    rng = SplitMix64(seed)
    order = rng.permutation(n)
    arcs = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.uniform() < density:
                arcs.append((order[a], order[b]))
    return Digraph.from_arcs(n, arcs)


def _random_tree_edges(rng: SplitMix64, n: int) -> list[tuple[int, int]]:
    order = rng.permutation(n)
    return [(order[rng.below(i)], order[i]) for i in range(1, n)]


def gen_random_connected_graph(n: int, density: float, seed: int) -> UndirectedGraph:
    """Random spanning tree plus every other pair with probability ``density``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_density(density)
    rng = SplitMix64(seed)
    edges = _random_tree_edges(rng, n)
    present = {frozenset(e) for e in edges}
    for u in range(n):
        for v in range(u + 1, n):
            if frozenset((u, v)) not in present and rng.uniform() < density:
                edges.append((u, v))
    return UndirectedGraph.from_edges(n, edges)


def gen_random_bipartite_graph(n: int, density: float, seed: int) -> UndirectedGraph:
    """Connected bipartite graph: a random tree, 2-coloured, plus cross-colour
    pairs with probability ``density``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_density(density)
    rng = SplitMix64(seed)
    tree = _random_tree_edges(rng, n)
    colour = [0] * n
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in tree:
        nbrs[u].append(v)
        nbrs[v].append(u)
    stack, seen = [0], {0}
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if v not in seen:
                seen.add(v)
                colour[v] = 1 - colour[u]
                stack.append(v)
    present = {frozenset(e) for e in tree}
    edges = list(tree)
    for u in range(n):
        for v in range(u + 1, n):
            if colour[u] != colour[v] and frozenset((u, v)) not in present:
                if rng.uniform() < density:
                    edges.append((u, v))
    return UndirectedGraph.from_edges(n, edges)


@dataclass(frozen=True)
class ExtremalPrediction:
    """Bounds on the cc-set count of a connected DAG of order ``n``.

    ``lower`` is attained by any DAG with a Hamiltonian path, ``upper`` by
    the balanced complete bipartite digraph.
    """

    n: int
    lower: int
    upper: int


def upper_bound(n: int) -> int:
    """``2**n + n + 1 - d`` with ``d = 2 * 2**(n/2)`` (n even) or ``3 * 2**((n-1)/2)`` (n odd)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    d = 2 * 2 ** (n // 2) if n % 2 == 0 else 3 * 2 ** ((n - 1) // 2)
    return 2**n + n + 1 - d


def predict(n: int) -> ExtremalPrediction:
    return ExtremalPrediction(n, n * (n + 1) // 2, upper_bound(n))
