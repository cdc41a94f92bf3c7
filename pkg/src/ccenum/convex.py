"""Enumeration of all convex sets of an acyclic digraph by peeling.

The procedure outputs the current vertex set, then for every source or
sink ``s`` not yet fixed it recurses on the digraph without ``s`` and
afterwards fixes ``s`` so later branches keep it. Removing a source or
sink from a convex set leaves a convex set, and every convex set is
reached by exactly one sequence of delete/fix decisions, so the output has
no repeats. Each call costs ``O(|V|)``, giving time linear in the total
size of the output.
"""

from __future__ import annotations

from typing import NamedTuple

from .graph import Digraph, acyclic_ordering
from .sink import Emitter, SetSink, recursion_headroom
from .vertexset import VertexSet, iter_bits


class PeelRecord(NamedTuple):
    vertex: int
    out_nbrs: tuple[int, ...]  # live out-neighbours whose in-degree dropped
    in_nbrs: tuple[int, ...]  # live in-neighbours whose out-degree dropped


class PeelState:
    """Shrinking induced subgraph with explicit degree bookkeeping.

    ``live`` is the current vertex set, ``fixed`` the vertices that may no
    longer be deleted. ``in_deg``/``out_deg`` count neighbours inside
    ``live`` and are kept exact across :func:`peel_step` and
    :func:`restore_step`.
    """

    def __init__(self, d: Digraph):
        self.digraph = d
        self.live_bits = (1 << d.n) - 1
        self.fixed_bits = 0
        self.in_deg = [len(a) for a in d.in_adj]
        self.out_deg = [len(a) for a in d.out_adj]
        self.undo: list[PeelRecord] = []

    @property
    def live(self) -> VertexSet:
        return VertexSet(self.digraph.n, self.live_bits)

    @property
    def fixed(self) -> VertexSet:
        return VertexSet(self.digraph.n, self.fixed_bits)

    def is_free_end(self, s: int) -> bool:
        """``s`` is live, unfixed, and a source or sink of the live subgraph."""
        bit = 1 << s
        if not self.live_bits & bit or self.fixed_bits & bit:
            return False
        return self.in_deg[s] == 0 or self.out_deg[s] == 0

    def candidates(self) -> list[int]:
        return [s for s in iter_bits(self.live_bits & ~self.fixed_bits) if self.is_free_end(s)]

    def fix(self, s: int) -> None:
        if not self.live_bits >> s & 1:
            raise ValueError(f"vertex {s} is not live")
        self.fixed_bits |= 1 << s

    def recount(self) -> tuple[list[int], list[int]]:
        """Degrees recomputed from scratch, for checking the bookkeeping."""
        d, live = self.digraph, self.live_bits
        ins = [(d.in_mask[v] & live).bit_count() for v in range(d.n)]
        outs = [(d.out_mask[v] & live).bit_count() for v in range(d.n)]
        return ins, outs

    def consistent(self) -> bool:
        """Stored degrees match a recount on every live vertex.

        A deleted vertex keeps the degrees it had when it was peeled, which
        become exact again once it is restored.
        """
        ins, outs = self.recount()
        return all(
            self.in_deg[v] == ins[v] and self.out_deg[v] == outs[v]
            for v in iter_bits(self.live_bits)
        )


def peel_step(state: PeelState, s: int) -> PeelRecord:
    """Delete the free source/sink ``s`` from ``state`` and return its undo record."""
    if not state.is_free_end(s):
        raise ValueError(f"vertex {s} is not an unfixed source or sink of the live subgraph")
    d, live = state.digraph, state.live_bits
    outs = tuple(v for v in d.out_adj[s] if live >> v & 1)
    ins = tuple(u for u in d.in_adj[s] if live >> u & 1)
    for v in outs:
        state.in_deg[v] -= 1
    for u in ins:
        state.out_deg[u] -= 1
    state.live_bits = live & ~(1 << s)
    record = PeelRecord(s, outs, ins)
    state.undo.append(record)
    return record


def restore_step(state: PeelState, record: PeelRecord) -> None:
    """Undo the most recent :func:`peel_step`."""
    if not state.undo or state.undo[-1] is not record:
        raise ValueError("records must be restored in reverse peel order")
    state.undo.pop()
    for v in record.out_nbrs:
        state.in_deg[v] += 1
    for u in record.in_nbrs:
        state.out_deg[u] += 1
    state.live_bits |= 1 << record.vertex


def _peel_search(d: Digraph, emit, include_empty: bool):
    ins, outs = d.in_mask, d.out_mask

    # A vertex is a source (sink) of the live subgraph iff its in- (out-)
    # neighbour mask misses ``live``: the same test as a zero degree count.
    def cs(live: int, fixed: int) -> bool:
        if (live or include_empty) and not emit(live):
            return False
        free = live & ~fixed
        while free:
            bit = free & -free
            free ^= bit
            s = bit.bit_length() - 1
            if not ins[s] & live or not outs[s] & live:
                if not cs(live & ~bit, fixed):
                    return False
                fixed |= bit
        return True

    return cs


def enumerate_convex(
    d: Digraph,
    sink: SetSink | None,
    include_empty: bool = False,
    limit: int | None = None,
) -> int:
    """Stream every convex set of ``d`` to ``sink`` exactly once.

    The full vertex set comes first. Sources and sinks are tried in
    ascending vertex order, deletion before fixing. The empty set is
    reached where the first deletion chain bottoms out and is only delivered
    when ``include_empty`` is set.
    Returns the number of sets delivered.
    """
    acyclic_ordering(d)
    emitter = Emitter(d.n, sink, limit)
    if emitter.exhausted:
        return 0
    with recursion_headroom(d.n + 10):
        _peel_search(d, emitter, include_empty)((1 << d.n) - 1, 0)
    return emitter.count


def count_convex(d: Digraph, include_empty: bool = False) -> int:
    """Number of convex sets of ``d`` (the empty set excluded by default)."""
    acyclic_ordering(d)
    ins, outs = d.in_mask, d.out_mask

    # same recursion as _peel_search, returning subtree sizes instead of emitting
    def cs(live: int, fixed: int) -> int:
        total = 1
        free = live & ~fixed
        while free:
            bit = free & -free
            free ^= bit
            s = bit.bit_length() - 1
            if not ins[s] & live or not outs[s] & live:
                rest = live & ~bit
                # a child with nothing left to delete is a single leaf
                total += cs(rest, fixed) if rest & ~fixed else 1
                fixed |= bit
        return total

    if d.n == 0:
        return int(include_empty)
    with recursion_headroom(d.n + 10):
        total = cs((1 << d.n) - 1, 0)
    # the empty leaf is counted once above
    return total if include_empty else total - 1
