"""Timing harness over the generator families.

Times are wall-clock medians and are reported, never asserted: they depend
on the machine. Counts are checked against the closed forms where one is
known.
"""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Optional, Union

from .cc import count_cc, enumerate_cc
from .connected import count_connected, enumerate_connected
from .convex import count_convex, enumerate_convex
from .generators import (
    gen_extremal,
    gen_path,
    gen_random_connected_graph,
    gen_random_dag,
    predict,
)
from .graph import Digraph, UndirectedGraph, underlying_graph

KINDS = ("cc", "convex", "connected")
FAMILIES = ("kpq", "path", "random-dag", "random-graph")

# NS columns of the published extremal tables, keyed by order
PUBLISHED_CC = {15: 32_400, 16: 65_041, 17: 130_322, 18: 261_139, 19: 522_722,
                20: 1_046_549, 21: 2_094_102, 22: 4_190_231}
PUBLISHED_CONVEX = {15: 32_768, 16: 65_536, 17: 131_072, 18: 261_144, 19: 524_288,
                    20: 1_046_575, 21: 2_097_152, 22: 4_194_304}


@dataclass
class RunReport:
    n: int
    m: int
    source: str
    algorithm: str
    count: int
    millis: float
    limit: Optional[int] = None
    expected: Optional[int] = None
    note: Optional[str] = None

    def __post_init__(self):
        if self.count < 0 or self.millis < 0:
            raise ValueError("count and millis must be non-negative")

    @property
    def ok(self) -> bool:
        return self.expected is None or self.expected == self.count

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


Graph = Union[Digraph, UndirectedGraph]


def count(kind: str, g: Graph, limit: int | None = None) -> int:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "connected":
        if isinstance(g, Digraph):
            g = underlying_graph(g)
        return count_connected(g) if limit is None else enumerate_connected(g, None, limit)
    if not isinstance(g, Digraph):
        raise TypeError(f"{kind} enumeration needs a Digraph")
    if kind == "cc":
        return count_cc(g) if limit is None else enumerate_cc(g, None, limit)
    return count_convex(g) if limit is None else enumerate_convex(g, None, limit=limit)


def make_instance(family: str, n: int, density: float = 0.3, seed: int = 0) -> Graph:
    if family == "kpq":
        return gen_extremal(n)
    if family == "path":
        return gen_path(n)
    if family == "random-dag":
        return gen_random_dag(n, density, seed)
    if family == "random-graph":
        return gen_random_connected_graph(n, density, seed)
    raise ValueError(f"unknown family {family!r}")


def expected_count(kind: str, family: str, n: int) -> Optional[int]:
    """Closed-form count for the deterministic families, else ``None``."""
    if family == "path":
        return n * (n + 1) // 2
    if family == "kpq":
        if kind == "convex":
            return 2**n - 1
        # connected sets of K_{a,b} are exactly the cc-sets of its orientation
        return predict(n).upper
    return None


def _note(kind: str, family: str, n: int, got: int) -> Optional[str]:
    if family != "kpq":
        return None
    if kind == "cc" and n in PUBLISHED_CC and PUBLISHED_CC[n] != got:
        return f"published table prints {PUBLISHED_CC[n]:,}; closed form gives {got:,}"
    if kind == "convex" and n in PUBLISHED_CONVEX and PUBLISHED_CONVEX[n] != got + 1:
        return f"published table prints {PUBLISHED_CONVEX[n]:,}; 2^n = {got + 1:,}"
    return None


def time_count(kind: str, g: Graph, repetitions: int = 3,
               limit: int | None = None) -> tuple[int, float]:
    """Median wall-clock milliseconds of ``repetitions`` counting runs."""
    if repetitions < 1:
        raise ValueError("repetitions must be positive")
    samples, got = [], 0
    for _ in range(repetitions):
        t0 = time.perf_counter()
        got = count(kind, g, limit)
        samples.append((time.perf_counter() - t0) * 1000.0)
    return got, statistics.median(samples)


def bench(kind: str, family: str, sizes, repetitions: int = 3, density: float = 0.3,
          seed: int = 0) -> list[RunReport]:
    reports = []
    for n in sizes:
        g = make_instance(family, n, density, seed)
        got, ms = time_count(kind, g, repetitions)
        reports.append(RunReport(
            n=g.n, m=g.m, source=f"{family}:{n}", algorithm=kind, count=got, millis=ms,
            expected=expected_count(kind, family, n), note=_note(kind, family, n, got),
        ))
    return reports


def format_table(reports: list[RunReport]) -> str:
    lines = [f"{'NV':>5} {'NA':>6} {'NS':>12} {'CT(ms)':>10}  status"]
    for r in reports:
        status = "ok" if r.ok else f"MISMATCH expected {r.expected}"
        line = f"{r.n:>5} {r.m:>6} {r.count:>12,} {r.millis:>10.1f}  {status}"
        if r.note:
            line += f"  ({r.note})"
        lines.append(line)
    return "\n".join(lines)
