"""Command-line front end: ``ccenum {enum,gen,verify,bench}``.

Exit codes: 0 ok, 1 verification mismatch, 2 parse/usage error, 3 cyclic
input, 4 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable, Optional, Sequence, TextIO

from . import bench as benchmod
from .cc import enumerate_cc
from .connected import enumerate_connected
from .convex import enumerate_convex
from .generators import (
    gen_kpq,
    gen_path,
    gen_random_connected_graph,
    gen_random_dag,
)
from .graph import CyclicGraphError, GraphError, format_edge_list, parse_digraph, parse_undirected
from .oracle import DEFAULT_CAP, OracleCapError, SetFamily, brute_cc, brute_connected, brute_convex
from .sink import Collector

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CYCLIC, EXIT_CAP = 0, 1, 2, 3, 4

# kind -> enumerator(graph, sink) used by ``verify``; tests swap entries out
ENUMERATORS: dict[str, Callable] = {
    "cc": lambda g, sink: enumerate_cc(g, sink),
    "convex": lambda g, sink: enumerate_convex(g, sink),
    "connected": lambda g, sink: enumerate_connected(g, sink),
}
ORACLES = {"cc": brute_cc, "convex": brute_convex, "connected": brute_connected}


class UsageError(Exception):
    pass


def _read_input(path: str, kind: str, stdin: TextIO):
    if path == "-":
        text = stdin.read()
    else:
        try:
            with open(path, "rb") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_undirected(text) if kind == "connected" else parse_digraph(text)


def cmd_enum(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    g = _read_input(args.input, args.kind, stdin)
    if args.include_empty and args.kind != "convex":
        raise UsageError("--include-empty only applies to convex enumeration")

    write = out.write

    def sink(s):
        write(" ".join(map(str, s)) + "\n")

    t0 = time.perf_counter()
    if args.count_only and args.limit is None and not args.include_empty and not args.parallel:
        n_sets = benchmod.count(args.kind, g)
    else:
        target = None if args.count_only else sink
        if args.kind == "cc":
            n_sets = enumerate_cc(g, target, args.limit, workers=args.parallel)
        elif args.kind == "convex":
            n_sets = enumerate_convex(g, target, args.include_empty, args.limit)
        else:
            n_sets = enumerate_connected(g, target, args.limit, workers=args.parallel)
    ms = (time.perf_counter() - t0) * 1000.0
    if args.count_only:
        write(f"{n_sets}\n")

    report = benchmod.RunReport(n=g.n, m=g.m, source=args.input, algorithm=args.kind,
                                count=n_sets, millis=ms, limit=args.limit)
    if args.report:
        write(report.to_json() + "\n")
    else:
        err.write(f"{args.kind}: {n_sets} sets, n={g.n} m={g.m}, {ms:.1f} ms\n")
    return EXIT_OK


def cmd_gen(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    p = args.params
    seed = args.seed

    def need(count: int, usage: str):
        extra = 1 if args.family.startswith("random") else 0
        if not count <= len(p) <= count + extra:
            raise UsageError(f"usage: gen {args.family} {usage}")

    try:
        if args.family == "kpq":
            need(2, "P Q")
            g = gen_kpq(int(p[0]), int(p[1]))
        elif args.family == "path":
            need(1, "N")
            g = gen_path(int(p[0]))
        else:
            need(2, "N DENSITY [SEED]")
            if len(p) == 3:
                seed = int(p[2])
            fn = gen_random_dag if args.family == "random-dag" else gen_random_connected_graph
            g = fn(int(p[0]), float(p[1]), seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(format_edge_list(g))
    return EXIT_OK


def _collect(kind: str, g) -> list:
    found = Collector()
    ENUMERATORS[kind](g, found)
    return found.sets


def cmd_verify(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    g = _read_input(args.input, args.kind, stdin)
    if g.n > args.cap:
        raise OracleCapError(f"{g.n} vertices exceeds the brute-force cap of {args.cap}")
    emitted = _collect(args.kind, g)
    fast = SetFamily(g.n, emitted)
    truth = ORACLES[args.kind](g, cap=args.cap)
    duplicates = len(emitted) - len(fast)
    if fast == truth and duplicates == 0:
        out.write(f"ok: {args.kind} {len(truth)} sets match the brute-force oracle\n")
        return EXIT_OK
    missing = truth.difference(fast)
    extra = fast.difference(truth)
    out.write(f"MISMATCH: {args.kind} enumerator {len(emitted)} sets, oracle {len(truth)}\n")
    if duplicates:
        out.write(f"  {duplicates} duplicate emissions\n")
    for label, sample in (("missing", missing), ("extra", extra)):
        if sample:
            shown = "; ".join(" ".join(map(str, s)) for s in sample[:5])
            more = f" (+{len(sample) - 5} more)" if len(sample) > 5 else ""
            out.write(f"  {label}: {shown}{more}\n")
    return EXIT_MISMATCH


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            sizes = range(int(lo), int(hi) + 1)
        else:
            sizes = range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"bad size range {text!r}; use N or LO..HI") from None
    if not sizes or sizes.start < 1:
        raise UsageError(f"empty or non-positive size range {text!r}")
    return sizes


def cmd_bench(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    sizes = _parse_range(args.sizes)
    if args.family == "kpq" and sizes.start < 2:
        raise UsageError("kpq sizes start at 2")
    if args.family == "random-graph" and args.kind != "connected":
        raise UsageError("random-graph instances are undirected; use kind 'connected'")
    reports = benchmod.bench(args.kind, args.family, sizes, args.reps, args.density, args.seed)
    out.write(benchmod.format_table(reports) + "\n")
    if args.json:
        for r in reports:
            out.write(r.to_json() + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccenum",
        description="Enumerate convex, connected convex, and connected vertex sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="stream sets, one per line")
    p.add_argument("kind", choices=benchmod.KINDS)
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.add_argument("--limit", type=int, metavar="K")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--include-empty", action="store_true")
    p.add_argument("--report", action="store_true", help="append a JSON run report to stdout")
    p.add_argument("--parallel", type=int, metavar="N", default=None)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("gen", help="write a generated instance as an edge list")
    p.add_argument("family", choices=benchmod.FAMILIES)
    p.add_argument("params", nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="compare an enumerator with the brute-force oracle")
    p.add_argument("kind", choices=benchmod.KINDS)
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time counting runs over a size range")
    p.add_argument("kind", choices=benchmod.KINDS)
    p.add_argument("family", choices=benchmod.FAMILIES)
    p.add_argument("sizes", help="N or LO..HI")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="also print one JSON report per row")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, *, stdout: TextIO = None,
         stderr: TextIO = None, stdin: TextIO = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if getattr(args, "limit", None) is not None and args.limit < 0:
        err.write("ccenum: --limit must be non-negative\n")
        return EXIT_USAGE
    if getattr(args, "parallel", None) is not None and args.parallel < 1:
        err.write("ccenum: --parallel must be positive\n")
        return EXIT_USAGE
    try:
        return args.func(args, out, err, stdin or sys.stdin)
    except CyclicGraphError as exc:
        err.write(f"ccenum: {exc}\n")
        return EXIT_CYCLIC
    except OracleCapError as exc:
        err.write(f"ccenum: {exc}\n")
        return EXIT_CAP
    except (GraphError, UsageError) as exc:
        err.write(f"ccenum: {exc}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
