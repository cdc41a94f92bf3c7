"""Graph types, edge-list I/O, topological ordering, closure and set predicates.

Vertices are the integers ``0..n-1``. Adjacency lists are sorted tuples and
every graph also carries per-vertex neighbour bitmasks, which is what the
enumerators actually consume.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Iterable, Sequence, Union

from .vertexset import VertexSet, iter_bits


class GraphError(ValueError):
    """Base class for invalid graph input."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CyclicGraphError(GraphError):
    """Raised when an acyclic digraph was required; ``cycle`` is a witness."""

    def __init__(self, cycle: Sequence[int]):
        self.cycle = list(cycle)
        path = " -> ".join(map(str, [*self.cycle, self.cycle[0]]))
        super().__init__(f"digraph contains a directed cycle: {path}")


def _masks(adj: Sequence[Sequence[int]]) -> tuple[int, ...]:
    out = []
    for nbrs in adj:
        bits = 0
        for v in nbrs:
            bits |= 1 << v
        out.append(bits)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Digraph:
    n: int
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "m", sum(len(a) for a in self.out_adj))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        """Build a digraph, dropping parallel arcs and rejecting self-loops."""
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        out_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            out_sets[u].add(v)
        in_lists: list[list[int]] = [[] for _ in range(n)]
        for u in range(n):
            for v in out_sets[u]:
                in_lists[v].append(u)
        return cls(
            n,
            tuple(tuple(sorted(s)) for s in out_sets),
            tuple(tuple(sorted(s)) for s in in_lists),
        )

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out_adj[u]]

    @cached_property
    def out_mask(self) -> tuple[int, ...]:
        return _masks(self.out_adj)

    @cached_property
    def in_mask(self) -> tuple[int, ...]:
        return _masks(self.in_adj)

    @cached_property
    def closure(self) -> "ClosureDigraph":
        """Transitive closure, computed on first use. Raises on cycles."""
        return transitive_closure(self, acyclic_ordering(self))

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self) -> int:
        return hash((self.n, self.out_adj))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class UndirectedGraph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "m", sum(len(a) for a in self.adj) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "UndirectedGraph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        return _masks(self.adj)

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"


# -- edge-list format ---------------------------------------------------------

TextSource = Union[str, bytes, IO[str], IO[bytes]]


def _read_pairs(text: TextSource) -> tuple[int, list[tuple[int, int, int]]]:
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None

    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            a, b = int(fields[0]), int(fields[1])
            ok = len(fields) == 2
        except (ValueError, IndexError):
            ok = False
        if not ok:
            what = "header 'n m'" if header is None else "'u v'"
            raise ParseError(f"expected {what}, got {raw!r}", lineno)
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex out of range 0..{n - 1}: {raw!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        if len(pairs) == header[1]:
            raise ParseError(f"more than the declared {header[1]} edge lines", lineno)
        pairs.append((a, b, lineno))
    if header is None:
        raise ParseError("missing header 'n m'")
    if len(pairs) != header[1]:
        raise ParseError(f"header declares {header[1]} edge lines, found {len(pairs)}")
    return header[0], pairs


def parse_digraph(text: TextSource) -> Digraph:
    """Parse the ``n m`` + ``u v`` edge-list format into a :class:`Digraph`."""
    n, pairs = _read_pairs(text)
    return Digraph.from_arcs(n, ((u, v) for u, v, _ in pairs))


def parse_undirected(text: TextSource) -> UndirectedGraph:
    n, pairs = _read_pairs(text)
    return UndirectedGraph.from_edges(n, ((u, v) for u, v, _ in pairs))


def format_edge_list(g: Union[Digraph, UndirectedGraph]) -> str:
    pairs = g.arcs() if isinstance(g, Digraph) else g.edges()
    lines = [f"{g.n} {len(pairs)}"] + [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


# -- ordering and closure -----------------------------------------------------


@dataclass(frozen=True)
class AcyclicOrdering:
    order: tuple[int, ...]
    rank: tuple[int, ...]

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "AcyclicOrdering":
        rank = [0] * len(order)
        for i, v in enumerate(order):
            rank[v] = i
        return cls(tuple(order), tuple(rank))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.order))

    def is_valid_for(self, d: Digraph) -> bool:
        return len(self.order) == d.n and all(
            self.rank[u] < self.rank[v] for u, v in d.arcs()
        )


def _find_cycle(d: Digraph, remaining: set[int]) -> list[int]:
    # every remaining vertex has an in-neighbour that is also remaining
    v = min(remaining)
    seen: dict[int, int] = {}
    walk: list[int] = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = next(u for u in d.in_adj[v] if u in remaining)
    cycle = walk[seen[v]:]
    cycle.reverse()
    return cycle


def acyclic_ordering(d: Digraph) -> AcyclicOrdering:
    """Topological order; among ready vertices the lowest index goes first."""
    indeg = [len(a) for a in d.in_adj]
    ready = [v for v in range(d.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in d.out_adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(order) < d.n:
        raise CyclicGraphError(_find_cycle(d, set(range(d.n)) - set(order)))
    return AcyclicOrdering.from_order(order)


@dataclass(frozen=True, eq=False)
class ClosureDigraph:
    """Reachability of an acyclic digraph.

    ``succ_bits[u]`` has bit ``v`` set iff there is a directed path ``u ~> v``
    with ``v != u``; ``pred_bits`` is the transpose.
    """

    base: Digraph
    ordering: AcyclicOrdering
    succ_bits: tuple[int, ...]
    pred_bits: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def succ(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.n, b) for b in self.succ_bits)

    @cached_property
    def pred(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.n, b) for b in self.pred_bits)

    def reaches(self, u: int, v: int) -> bool:
        return bool(self.succ_bits[u] >> v & 1)

    def as_digraph(self) -> Digraph:
        """The closure as a plain digraph (an arc for every reachable pair)."""
        return Digraph.from_arcs(
            self.n, ((u, v) for u in range(self.n) for v in iter_bits(self.succ_bits[u]))
        )


def transitive_closure(d: Digraph, ord: AcyclicOrdering | None = None) -> ClosureDigraph:
    """Bitset closure: successors swept in reverse order, predecessors forward."""
    if ord is None:
        ord = acyclic_ordering(d)
    out_adj, in_adj = d.out_adj, d.in_adj
    succ = [0] * d.n
    for u in reversed(ord.order):
        acc = 0
        for v in out_adj[u]:
            acc |= succ[v] | (1 << v)
        succ[u] = acc
    pred = [0] * d.n
    for v in ord.order:
        acc = 0
        for u in in_adj[v]:
            acc |= pred[u] | (1 << u)
        pred[v] = acc
    return ClosureDigraph(d, ord, tuple(succ), tuple(pred))


# -- predicates ---------------------------------------------------------------


def _bits_of(s: Union[VertexSet, int]) -> int:
    return s.bits if isinstance(s, VertexSet) else s


def is_convex(d: Union[Digraph, ClosureDigraph], s: Union[VertexSet, int]) -> bool:
    """True iff no directed path leaves ``s`` and comes back into it.

    Equivalently: no vertex outside ``s`` is both a descendant and an
    ancestor of members of ``s``.
    """
    bits = _bits_of(s)
    if not bits:
        raise ValueError("the empty set is not convex by definition")
    c = d if isinstance(d, ClosureDigraph) else d.closure
    below = above = 0
    succ, pred = c.succ_bits, c.pred_bits
    rest = bits
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        below |= succ[v]
        above |= pred[v]
        rest ^= low
    return not (below & above & ~bits)


def _connected_within(masks: Sequence[int], bits: int) -> bool:
    start = bits & -bits
    seen = frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = masks[low.bit_length() - 1] & bits & ~seen
        seen |= new
        frontier |= new
    return seen == bits


def is_connected_set(
    g: Union[Digraph, UndirectedGraph, ClosureDigraph], s: Union[VertexSet, int]
) -> bool:
    """True iff ``s`` induces a connected subgraph, ignoring arc directions."""
    bits = _bits_of(s)
    if not bits:
        raise ValueError("the empty set is not connected by definition")
    if isinstance(g, ClosureDigraph):
        masks = [a | b for a, b in zip(g.succ_bits, g.pred_bits)]
    elif isinstance(g, Digraph):
        masks = [a | b for a, b in zip(g.out_mask, g.in_mask)]
    else:
        masks = g.adj_mask
    return _connected_within(masks, bits)


def underlying_graph(d: Digraph) -> UndirectedGraph:
    return UndirectedGraph.from_edges(d.n, d.arcs())


def orient_bipartite(g: UndirectedGraph) -> Digraph:
    """Orient every edge of a bipartite graph from one colour class to the other.

    In each component the class holding the lowest-indexed vertex is the
    source side. Raises :class:`GraphError` on an odd cycle.
    """
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    stack.append(v)
                elif colour[v] == colour[u]:
                    raise GraphError(f"graph is not bipartite (edge {u}-{v})")
    return Digraph.from_arcs(
        g.n, ((u, v) if colour[u] == 0 else (v, u) for u, v in g.edges())
    )
