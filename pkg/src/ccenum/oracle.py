"""Brute-force ground truth: test every non-empty subset against the definitions.

Only meant for small graphs; the subset count doubles with each vertex, so
callers must stay under ``cap`` vertices.
"""

from __future__ import annotations

from typing import Callable, Iterable, Union

from .graph import Digraph, UndirectedGraph, is_connected_set, is_convex
from .vertexset import VertexSet

DEFAULT_CAP = 20


class OracleCapError(ValueError):
    pass


class SetFamily:
    """A deduplicated family of vertex sets in canonical order.

    Sets are ordered lexicographically by their sorted member lists, so two
    families are equal iff their :attr:`sets` lists are equal.
    """

    def __init__(self, universe_size: int, sets: Iterable[Union[VertexSet, Iterable[int]]] = ()):
        self.universe_size = universe_size
        keyed = {}
        for s in sets:
            if not isinstance(s, VertexSet):
                s = VertexSet.of(universe_size, s)
            keyed[tuple(s)] = s
        self._keys = sorted(keyed)
        self._keyset = frozenset(self._keys)
        self.sets = [keyed[k] for k in self._keys]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s: object) -> bool:
        if isinstance(s, VertexSet):
            s = tuple(s)
        return tuple(s) in self._keyset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self._keys == other._keys

    def as_lists(self) -> list[list[int]]:
        return [list(k) for k in self._keys]

    def difference(self, other: "SetFamily") -> list[list[int]]:
        return [list(k) for k in self._keys if k not in other._keyset]

    def __repr__(self) -> str:
        return f"SetFamily(size={len(self)})"


def _brute(n: int, keep: Callable[[int], bool], cap: int) -> SetFamily:
    if n > cap:
        raise OracleCapError(f"{n} vertices exceeds the brute-force cap of {cap}")
    return SetFamily(n, (VertexSet(n, bits) for bits in range(1, 1 << n) if keep(bits)))


def brute_cc(d: Digraph, cap: int = DEFAULT_CAP) -> SetFamily:
    """All connected convex sets of ``d``."""
    if d.n > cap:
        raise OracleCapError(f"{d.n} vertices exceeds the brute-force cap of {cap}")
    closure = d.closure
    return _brute(d.n, lambda s: is_convex(closure, s) and is_connected_set(d, s), cap)


def brute_convex(d: Digraph, cap: int = DEFAULT_CAP) -> SetFamily:
    if d.n > cap:
        raise OracleCapError(f"{d.n} vertices exceeds the brute-force cap of {cap}")
    closure = d.closure
    return _brute(d.n, lambda s: is_convex(closure, s), cap)


def brute_connected(g: UndirectedGraph, cap: int = DEFAULT_CAP) -> SetFamily:
    return _brute(g.n, lambda s: is_connected_set(g, s), cap)
