"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .graph import (Graph, GraphError, components, format_graph, parse_graph,
                    verify_partition)
from .nice import make_nice
from .oracle import (FAMILIES, OracleLimitError, brute_pn, connected_graphs, gen,
                     sen_bruteforce)
from .solver import SolverError, path_number, path_partition, search_patterns
from .subcubic import pn_subcubic


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def parse_edgelist(text: str) -> Graph:
    """Plain ``u v`` lines; ``#`` starts a comment; a lone token is a vertex."""
    verts: dict = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) == 1:
            verts.setdefault(line[0], None)
        elif len(line) == 2:
            verts.setdefault(line[0], None)
            verts.setdefault(line[1], None)
            edges.append(tuple(line))
        else:
            raise GraphError(f"line {lineno}: expected one or two tokens")
    return Graph(verts, edges)


def load_graph(path: str, fmt: str) -> Graph:
    text = _read(path)
    return parse_edgelist(text) if fmt == "edgelist" else parse_graph(text)


def _format_edgelist(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in (sorted(e, key=g.index.__getitem__) for e in g.edges())]
    touched = {v for e in g.edges() for v in e}
    lines += [str(v) for v in g.vertices if v not in touched]
    return "\n".join(lines) + "\n"


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


# subcommands


def cmd_solve(args) -> int:
    g = load_graph(args.file, args.format)
    t0 = time.perf_counter()
    if args.dump_patterns:
        total = 0
        for c in components(g):
            if c.m == 0:
                continue
            if c.max_degree() <= 3:
                total += pn_subcubic(c)
                continue
            nice = make_nice(c)
            sol = search_patterns(nice.nice_graph, args.lmax,
                                  on_pattern=lambda p: print(p.to_json()))
            total += sol.value + nice.pan_offset
        pn = total
    else:
        pn = path_number(g, args.lmax)
    stats = {"seconds": round(time.perf_counter() - t0, 6), "n": g.n, "m": g.m}
    _emit(args, {"pn": pn, "stats": stats}, f"pn {pn}")
    return 0


def cmd_witness(args) -> int:
    g = load_graph(args.file, args.format)
    t0 = time.perf_counter()
    paths = path_partition(g, args.lmax)
    stats = {"seconds": round(time.perf_counter() - t0, 6), "n": g.n, "m": g.m}
    if args.json:
        print(json.dumps({"pn": len(paths), "paths": [[str(v) for v in p] for p in paths],
                          "stats": stats}))
    else:
        for p in paths:
            print(" ".join(str(v) for v in p))
    return 0


def _read_partition(text: str) -> list[tuple]:
    stripped = text.strip()
    if stripped.startswith("{"):
        return [tuple(p) for p in json.loads(stripped)["paths"]]
    return [tuple(line.split()) for line in text.splitlines() if line.strip()]


def cmd_verify(args) -> int:
    if args.file == "-" and args.partition == "-":
        raise UsageError("graph and partition cannot both come from stdin")
    g = load_graph(args.file, args.format)
    paths = _read_partition(_read(args.partition))
    ok = verify_partition(g, paths)
    _emit(args, {"valid": ok, "paths": len(paths)}, "ok" if ok else "invalid")
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    g = load_graph(args.file, args.format)
    pn = brute_pn(g, args.cap)
    _emit(args, {"pn": pn}, f"pn {pn}")
    return 0


def cmd_sen(args) -> int:
    g = load_graph(args.file, args.format)
    s = sen_bruteforce(g, args.cap)
    _emit(args, {"sen": s}, f"sen {s}")
    return 0


def _parse_params(items) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not of the form key=value")
        k, v = item.split("=", 1)
        out[k] = v
    return out


def cmd_gen(args) -> int:
    try:
        g = gen(args.family, _parse_params(args.params), args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = _format_edgelist(g) if args.format == "edgelist" else format_graph(
        g, comment=f"{args.family} seed {args.seed}")
    sys.stdout.write(text)
    return 0


def _selftest_one(edges_n):
    n, edges = edges_n
    g = Graph(range(1, n + 1), edges)
    want = brute_pn(g)
    got = path_number(g)
    if g.max_degree() <= 3 and pn_subcubic(g) != want:
        return False
    if got != want:
        return False
    part = path_partition(g)
    return len(part) == want and verify_partition(g, part)


def cmd_selftest(args) -> int:
    jobs = [(g.n, [tuple(e) for e in g.edges()]) for g in connected_graphs(args.nmax)
            if g.m <= 20]
    t0 = time.perf_counter()
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(_selftest_one, jobs, chunksize=16))
    else:
        results = [_selftest_one(j) for j in jobs]
    bad = results.count(False)
    secs = time.perf_counter() - t0
    _emit(args, {"graphs": len(jobs), "failures": bad, "seconds": round(secs, 3)},
          f"selftest {len(jobs)} graphs, {bad} failures, {secs:.1f}s")
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("dimacs", "edgelist"), default="dimacs",
                        help="graph file format (default: dimacs)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes (default: all cores)")

    ap = argparse.ArgumentParser(prog="pathnumber",
                                 description="Exact path number of undirected graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="print pn")
    p.add_argument("file")
    p.add_argument("--lmax", type=int, default=None, help="cap on pattern variables")
    p.add_argument("--dump-patterns", action="store_true",
                   help="stream enumerated patterns as JSON lines")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("witness", parents=[common], help="print an optimal partition")
    p.add_argument("file")
    p.add_argument("--lmax", type=int, default=None)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="check a partition")
    p.add_argument("file")
    p.add_argument("partition", help="partition file, or - for stdin")
    p.set_defaults(func=cmd_verify)

    for name, func, what in (("oracle", cmd_oracle, "brute-force pn"),
                             ("sen", cmd_sen, "subcubic edge-deletion number")):
        p = sub.add_parser(name, parents=[common], help=what)
        p.add_argument("file")
        p.add_argument("--cap", type=int, default=20, help="edge limit for brute force")
        p.set_defaults(func=func)

    p = sub.add_parser("gen", parents=[common], help="generate a seeded instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", help="key=value parameters, e.g. n=7 extra=2")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", parents=[common], help="differential test against brute force")
    p.add_argument("--nmax", type=int, default=6)
    p.set_defaults(func=cmd_selftest)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "lmax", None) is not None and args.lmax < 0:
        print("error: --lmax must be nonnegative", file=sys.stderr)
        return 2
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, GraphError, OracleLimitError, SolverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
