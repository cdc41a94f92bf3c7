"""Immutable fixed-capacity vertex sets backed by a Python integer bitmask."""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


_set = object.__setattr__


class VertexSet:
    """A subset of ``{0, ..., universe_size - 1}``.

    Bit ``i`` of :attr:`bits` is set iff vertex ``i`` is a member. Instances
    are immutable, so a set handed to a sink can be kept without copying.
    """

    __slots__ = ("universe_size", "bits", "count")

    def __init__(self, universe_size: int, bits: int = 0):
        if universe_size < 0:
            raise ValueError("universe_size must be non-negative")
        if bits < 0 or bits >> universe_size:
            raise ValueError(f"bits {bits:#x} exceed universe of size {universe_size}")
        object.__setattr__(self, "universe_size", universe_size)
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "count", bits.bit_count())

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def _unchecked(cls, universe_size: int, bits: int) -> "VertexSet":
        # hot path for enumerators: bits are known to fit the universe
        s = object.__new__(cls)
        _set(s, "universe_size", universe_size)
        _set(s, "bits", bits)
        _set(s, "count", bits.bit_count())
        return s

    @classmethod
    def of(cls, universe_size: int, members: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in members:
            if not 0 <= v < universe_size:
                raise ValueError(f"vertex {v} outside 0..{universe_size - 1}")
            bits |= 1 << v
        return cls(universe_size, bits)

    @classmethod
    def full(cls, universe_size: int) -> "VertexSet":
        return cls(universe_size, (1 << universe_size) - 1)

    def __len__(self) -> int:
        return self.count

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.universe_size and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def min(self) -> int:
        if not self.bits:
            raise ValueError("min() of empty VertexSet")
        return (self.bits & -self.bits).bit_length() - 1

    def max(self) -> int:
        if not self.bits:
            raise ValueError("max() of empty VertexSet")
        return self.bits.bit_length() - 1

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def _check(self, other: "VertexSet") -> None:
        if other.universe_size != self.universe_size:
            raise ValueError("VertexSets over different universes")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe_size, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe_size, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe_size, self.bits & ~other.bits)

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return not self.bits & other.bits

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return not self.bits & ~other.bits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.universe_size == other.universe_size and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.universe_size, self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.universe_size}, {self.to_list()})"
