"""Enumeration of connected vertex sets of an undirected graph.

Same branching scheme as the cc-set search, without closures: starting
from ``X = {v_i}`` with pool ``Y = {v_{i+1}, ...}``, keep the neighbours of
``X`` that are still in ``Y``, pick the lowest-indexed one ``v`` and branch
on including or excluding it. ``X`` is emitted once it has no neighbour
left in ``Y``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .graph import UndirectedGraph, is_connected_set
from .sink import Emitter, SetSink, recursion_headroom
from .vertexset import VertexSet


@dataclass(frozen=True)
class ConnFrame:
    x: VertexSet
    y: VertexSet
    nx: VertexSet  # neighbours of x inside y


def _make_search(adj: Sequence[int], emit: Callable[[int], bool],
                 hook: Optional[Callable[[int, int, int], None]] = None):
    def search(x: int, y: int, nx: int) -> bool:
        if hook is not None:
            hook(x, y, nx)
        if not nx:
            return emit(x)
        bit = nx & -nx
        ny = y & ~bit
        grown = (nx & ~bit) | (adj[bit.bit_length() - 1] & ny)
        if not search(x | bit, ny, grown):
            return False
        return search(x, ny, nx & ~bit)

    return search


def _outer(adj: Sequence[int], n: int, emit, hook=None, start: int = 0,
           stop: Optional[int] = None) -> bool:
    search = _make_search(adj, emit, hook)
    full = (1 << n) - 1
    for i in range(start, n if stop is None else stop):
        y = full & ~((2 << i) - 1)
        if not search(1 << i, y, adj[i] & y):
            return False
    return True


def _collect_start(adj: Sequence[int], n: int, i: int) -> list[int]:
    found: list[int] = []

    def emit(x: int) -> bool:
        found.append(x)
        return True

    with recursion_headroom(n + 10):
        _outer(adj, n, emit, start=i, stop=i + 1)
    return found


def _debug_hook(g: UndirectedGraph):
    adj = g.adj_mask

    def check(x: int, y: int, nx: int) -> None:
        around = 0
        for v in VertexSet(g.n, x):
            around |= adj[v]
        assert not x & y, "X and Y overlap"
        assert nx == around & y, "stale neighbourhood"
        assert is_connected_set(g, x), "X is not connected"

    return check


def enumerate_connected(
    g: UndirectedGraph,
    sink: SetSink | None,
    limit: int | None = None,
    *,
    workers: int | None = None,
    debug: bool = False,
    trace: Callable[[ConnFrame], None] | None = None,
) -> int:
    """Stream every connected vertex set of ``g`` to ``sink`` exactly once.

    Disconnected graphs are fine; every vertex still seeds its own search.
    Order, ``limit`` and ``workers`` behave as in
    :func:`ccenum.cc.enumerate_cc`. Returns the number of sets delivered.
    """
    emitter = Emitter(g.n, sink, limit)
    if emitter.exhausted:
        return 0
    adj = g.adj_mask
    if workers is not None and workers > 1 and g.n and not (debug or trace):
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_collect_start, [adj] * g.n, [g.n] * g.n, range(g.n)):
                if not all(map(emitter, chunk)):
                    break
        return emitter.count

    hook = _debug_hook(g) if debug else None
    if trace is not None:
        check = hook

        def hook(x, y, nx):
            if check is not None:
                check(x, y, nx)
            trace(ConnFrame(VertexSet(g.n, x), VertexSet(g.n, y), VertexSet(g.n, nx)))

    with recursion_headroom(g.n + 10):
        _outer(adj, g.n, emitter, hook)
    return emitter.count


def count_connected(g: UndirectedGraph) -> int:
    """Number of connected vertex sets of ``g``."""
    total = 0

    def emit(x: int) -> bool:
        nonlocal total
        total += 1
        return True

    with recursion_headroom(g.n + 10):
        _outer(g.adj_mask, g.n, emit)
    return total
