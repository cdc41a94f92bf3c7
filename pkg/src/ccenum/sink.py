"""The streaming consumer contract shared by every enumerator.

A sink is any callable taking one :class:`~ccenum.vertexset.VertexSet`. It
returns ``False`` to stop the enumeration; any other return value
(``None`` included) lets it continue. Sets passed to a sink are immutable
snapshots and may be retained.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from typing import Callable, Iterator, Optional, Sequence

from .vertexset import VertexSet, iter_bits

SetSink = Callable[[VertexSet], Optional[bool]]


class Collector:
    """Sink that keeps every set it receives, in order."""

    def __init__(self):
        self.sets: list[VertexSet] = []

    def __call__(self, s: VertexSet) -> None:
        self.sets.append(s)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)


def remap_bits(bits: int, perm: Sequence[int]) -> int:
    """Move bit ``i`` of ``bits`` to bit ``perm[i]``."""
    out = 0
    while bits:
        low = bits & -bits
        out |= 1 << perm[low.bit_length() - 1]
        bits ^= low
    return out


class Emitter:
    """Adapts a raw-bitmask emission callback onto a :data:`SetSink`.

    Counts what was delivered and turns ``limit`` into a stop signal, so
    limited and unlimited runs go through the same code path.
    """

    def __init__(
        self,
        n: int,
        sink: SetSink | None,
        limit: int | None = None,
        perm: Sequence[int] | None = None,
    ):
        if limit is not None and limit < 0:
            raise ValueError("limit must be non-negative")
        self.n = n
        self.sink = sink
        self.limit = limit
        self.perm = perm
        self.count = 0

    @property
    def exhausted(self) -> bool:
        return self.limit is not None and self.count >= self.limit

    def __call__(self, bits: int) -> bool:
        if self.perm is not None:
            bits = remap_bits(bits, self.perm)
        self.count += 1
        keep_going = True
        if self.sink is not None:
            keep_going = self.sink(VertexSet._unchecked(self.n, bits)) is not False
        return keep_going and not self.exhausted


@contextmanager
def recursion_headroom(depth: int):
    """Temporarily raise the interpreter recursion limit by ``depth`` frames."""
    old = sys.getrecursionlimit()
    need = len_stack() + depth + 100
    if need > old:
        sys.setrecursionlimit(need)
    try:
        yield
    finally:
        if need > old:
            sys.setrecursionlimit(old)


def len_stack() -> int:
    f, depth = sys._getframe(), 0
    while f is not None:
        f, depth = f.f_back, depth + 1
    return depth


__all__ = ["SetSink", "Collector", "Emitter", "remap_bits", "iter_bits", "recursion_headroom"]
