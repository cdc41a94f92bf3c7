"""Enumeration of connected convex sets ("cc-sets") of an acyclic digraph.

Everything runs on the transitive closure, relabelled so that bit ``i`` is
the vertex of rank ``i`` in the acyclic ordering. For each vertex ``v_i``
the search grows ``X = {v_i}`` inside the pool ``Y = {v_{i+1}, ...}``:

* if ``X`` has closure out-neighbours in ``Y`` (the set ``A``), pick the
  highest-ranked one ``v``; otherwise pick the lowest-ranked closure
  in-neighbour ``v`` from ``B``;
* branch on ``v``: either add ``v`` together with everything of ``A``
  (resp. ``B``) lying between ``X`` and ``v``, or drop ``v`` from ``Y``;
* when ``A`` and ``B`` are both empty, ``X`` is a cc-set and is emitted.

Every call either emits one set or has two children, so the number of
internal calls is one less than the number of leaves for each start
vertex, and the work per call is ``O(n)`` word operations.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .graph import ClosureDigraph, Digraph, is_connected_set, is_convex
from .sink import Emitter, SetSink, recursion_headroom, remap_bits
from .vertexset import VertexSet

# hook(x, y, out_frontier, in_frontier), all rank-space bitmasks
FrameHook = Callable[[int, int, int, int], None]


@dataclass(frozen=True)
class EnumFrame:
    """State of one search call, in original vertex ids.

    ``out_frontier`` and ``in_frontier`` are the closure out- and
    in-neighbourhoods of ``x`` restricted to ``y``.
    """

    x: VertexSet
    y: VertexSet
    out_frontier: VertexSet
    in_frontier: VertexSet

    @classmethod
    def start(cls, closure: ClosureDigraph, vertex: int) -> "EnumFrame":
        """Top-level frame for ``vertex``: ``Y`` is every later vertex in the ordering."""
        n, rank = closure.n, closure.ordering.rank
        y = 0
        for u in range(n):
            if rank[u] > rank[vertex]:
                y |= 1 << u
        return cls.from_sets(closure, VertexSet(n, 1 << vertex), VertexSet(n, y))

    @classmethod
    def from_sets(cls, closure: ClosureDigraph, x: VertexSet, y: VertexSet) -> "EnumFrame":
        below = above = 0
        for v in x:
            below |= closure.succ_bits[v]
            above |= closure.pred_bits[v]
        n = closure.n
        return cls(x, y, VertexSet(n, below & y.bits), VertexSet(n, above & y.bits))


class _RankSpace:
    """Closure masks relabelled so bit positions are ranks."""

    def __init__(self, closure: ClosureDigraph):
        ordering = closure.ordering
        self.n = closure.n
        if ordering.is_identity():
            self.succ, self.pred = closure.succ_bits, closure.pred_bits
            self.to_orig = self.to_rank = None
        else:
            order, rank = ordering.order, ordering.rank
            self.succ = tuple(remap_bits(closure.succ_bits[v], rank) for v in order)
            self.pred = tuple(remap_bits(closure.pred_bits[v], rank) for v in order)
            self.to_orig, self.to_rank = order, rank

    def rank_bits(self, s: VertexSet) -> int:
        return s.bits if self.to_rank is None else remap_bits(s.bits, self.to_rank)

    def orig_set(self, bits: int) -> VertexSet:
        if self.to_orig is not None:
            bits = remap_bits(bits, self.to_orig)
        return VertexSet._unchecked(self.n, bits)


def _make_search(succ: Sequence[int], pred: Sequence[int], emit: Callable[[int], bool],
                 hook: Optional[FrameHook] = None):
    """Build the recursive search. It returns ``False`` once ``emit`` asks to stop."""

    def search(x: int, y: int, out: int, inn: int) -> bool:
        if hook is not None:
            hook(x, y, out, inn)
        if out:
            # highest-ranked closure out-neighbour; R is v plus A-members below it
            v = out.bit_length() - 1
            bit = 1 << v
            r = (pred[v] & out) | bit
            ny = y & ~r
            if not search(x | r, ny, out & ~r, (inn | pred[v]) & ny):
                return False
            return search(x, y & ~bit, out & ~bit, inn)
        if inn:
            # lowest-ranked closure in-neighbour; A is empty on this side
            bit = inn & -inn
            v = bit.bit_length() - 1
            r = (succ[v] & inn) | bit
            ny = y & ~r
            if not search(x | r, ny, succ[v] & ny, inn & ~r):
                return False
            return search(x, y & ~bit, out, inn & ~bit)
        return emit(x)

    return search


def _outer(succ: Sequence[int], pred: Sequence[int], n: int, emit, hook=None,
           start: int = 0, stop: Optional[int] = None) -> bool:
    search = _make_search(succ, pred, emit, hook)
    full = (1 << n) - 1
    for i in range(start, n if stop is None else stop):
        y = full & ~((2 << i) - 1)
        if not search(1 << i, y, succ[i] & y, pred[i] & y):
            return False
    return True


def _collect_start(succ: Sequence[int], pred: Sequence[int], n: int, i: int) -> list[int]:
    found: list[int] = []

    def emit(x: int) -> bool:
        found.append(x)
        return True

    with recursion_headroom(n + 10):
        _outer(succ, pred, n, emit, start=i, stop=i + 1)
    return found


def _count_start(succ: Sequence[int], pred: Sequence[int], n: int, i: int) -> int:
    total = 0

    def emit(x: int) -> bool:
        nonlocal total
        total += 1
        return True

    with recursion_headroom(n + 10):
        _outer(succ, pred, n, emit, start=i, stop=i + 1)
    return total


def _debug_hook(rs: _RankSpace, closure: ClosureDigraph) -> FrameHook:
    def check(x: int, y: int, out: int, inn: int) -> None:
        below = above = 0
        for v in VertexSet(rs.n, x):
            below |= rs.succ[v]
            above |= rs.pred[v]
        assert not x & y, "X and Y overlap"
        assert out == below & y and inn == above & y, "stale frontier"
        xs, xy = rs.orig_set(x), rs.orig_set(x | y)
        assert is_convex(closure, xs) and is_connected_set(closure.base, xs), "X is not a cc-set"
        assert is_convex(closure, xy), "X | Y is not convex"

    return check


def enumerate_cc(
    d: Digraph,
    sink: SetSink | None,
    limit: int | None = None,
    *,
    workers: int | None = None,
    debug: bool = False,
) -> int:
    """Stream every connected convex set of the acyclic digraph ``d`` to ``sink``.

    Sets arrive in a deterministic order: grouped by their lowest-ranked
    vertex, and within a group the include-``v`` branch comes first. With
    ``limit=k`` exactly the first ``min(k, cc(d))`` sets of that order are
    delivered. Returns the number of sets delivered.

    ``workers > 1`` spreads the start vertices over processes and replays
    their buffered output in start-vertex order, which gives the same
    sequence as the serial run. ``debug`` re-checks the frame invariants at
    every call.

    Raises :class:`~ccenum.graph.CyclicGraphError` if ``d`` has a cycle.
    """
    closure = d.closure
    rs = _RankSpace(closure)
    emitter = Emitter(d.n, sink, limit, rs.to_orig)
    if emitter.exhausted:
        return 0
    if workers is not None and workers > 1 and d.n and not debug:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_collect_start, *zip(*[(rs.succ, rs.pred, d.n, i) for i in range(d.n)]))
            for chunk in chunks:
                if not all(map(emitter, chunk)):
                    break
        return emitter.count
    hook = _debug_hook(rs, closure) if debug else None
    with recursion_headroom(d.n + 10):
        _outer(rs.succ, rs.pred, d.n, emitter, hook)
    return emitter.count


def subroutine_b(
    frame: EnumFrame,
    closure: ClosureDigraph,
    sink: SetSink | None,
    trace: Callable[[EnumFrame], None] | None = None,
) -> bool:
    """Emit every cc-set ``S`` with ``frame.x <= S <= frame.x | frame.y``.

    The frame must satisfy the search invariants: ``x`` a cc-set, ``x | y``
    convex, ``x`` and ``y`` disjoint, frontiers consistent with ``x``.
    ``trace`` sees every call's frame, in call order. Returns ``False`` if
    the sink stopped the search.
    """
    rs = _RankSpace(closure)
    emitter = Emitter(closure.n, sink, None, rs.to_orig)
    hook = None
    if trace is not None:
        def hook(x, y, out, inn):
            trace(EnumFrame(rs.orig_set(x), rs.orig_set(y), rs.orig_set(out), rs.orig_set(inn)))
    search = _make_search(rs.succ, rs.pred, emitter, hook)
    with recursion_headroom(closure.n + 10):
        return search(
            rs.rank_bits(frame.x),
            rs.rank_bits(frame.y),
            rs.rank_bits(frame.out_frontier),
            rs.rank_bits(frame.in_frontier),
        )


def count_cc(d: Digraph, *, workers: int | None = None) -> int:
    """Number of connected convex sets of ``d``."""
    closure = d.closure
    rs = _RankSpace(closure)
    if workers is not None and workers > 1 and d.n:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            args = [(rs.succ, rs.pred, d.n, i) for i in range(d.n)]
            return sum(pool.map(_count_start, *zip(*args)))
    total = 0

    def emit(x: int) -> bool:
        nonlocal total
        total += 1
        return True

    with recursion_headroom(d.n + 10):
        _outer(rs.succ, rs.pred, d.n, emit)
    return total
