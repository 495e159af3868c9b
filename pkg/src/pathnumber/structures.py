"""Degree-profile structures: pan cycles, bull cycles, V4 and high(G).

Every pan or bull cycle consists of maximal chains of degree-2 vertices
hanging between degree-3 vertices, so both are found by walking chains
instead of enumerating cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph, GraphError, is_connected, vkey


class ComponentKind(str, Enum):
    CYCLE = "cycle"
    SUBDIVIDED_DIAMOND = "subdivided_diamond"
    # a subdivided triangle is a cycle; classify_component reports CYCLE
    SUBDIVIDED_TRIANGLE = "subdivided_triangle"
    OTHER = "other"


@dataclass(frozen=True)
class StructureReport:
    v4: frozenset
    high: int
    pan_cycles: list = field(default_factory=list)
    bull_cycles: list = field(default_factory=list)
    bull_pairs: frozenset = frozenset()


def high_degree_set(g: Graph) -> frozenset:
    return frozenset(v for v in g.vertices if g.degree(v) >= 4)


def high(g: Graph) -> int:
    return sum(g.degree(v) for v in g.vertices if g.degree(v) >= 4)


def closed_neighborhood(g: Graph, vs) -> frozenset:
    out = set(vs)
    for v in vs:
        out.update(g.neighbors(v))
    return frozenset(out)


def walk_chain(g: Graph, start, first) -> list:
    """Follow ``start -> first -> ...`` through degree-2 vertices.

    Returns the vertex list from ``start`` up to and including the first
    vertex that is not of degree 2 (or ``start`` again if the chain closes).
    """
    chain = [start, first]
    prev, cur = start, first
    while g.degree(cur) == 2 and cur != start:
        a, b = g.neighbors(cur)
        nxt = b if a == prev else a
        chain.append(nxt)
        prev, cur = cur, nxt
    return chain


def pan_cycles(g: Graph) -> list[tuple]:
    """Pan cycles as vertex tuples starting at their degree-3 vertex."""
    found = {}
    for x in g.sorted_vertices():
        if g.degree(x) != 3:
            continue
        for y in sorted(g.neighbors(x), key=vkey):
            chain = walk_chain(g, x, y)
            if chain[-1] == x and len(chain) >= 4:
                cyc = chain[:-1]
                key = frozenset(cyc)
                if key not in found:
                    found[key] = tuple(cyc)
    return sorted(found.values(), key=lambda c: sorted(vkey(v) for v in c))


def _chains_between_cubic(g: Graph) -> dict:
    """Map each pair {u, v} of distinct degree-3 vertices to the list of
    degree-2 chains joining them (each chain a vertex list from u to v)."""
    out: dict = {}
    for u in g.sorted_vertices():
        if g.degree(u) != 3:
            continue
        for y in sorted(g.neighbors(u), key=vkey):
            chain = walk_chain(g, u, y)
            v = chain[-1]
            if v == u or g.degree(v) != 3:
                continue
            if vkey(u) < vkey(v):
                out.setdefault((u, v), []).append(chain)
    return out


def bull_cycles(g: Graph) -> list[tuple]:
    """Bull cycles as vertex tuples ``(u, ..., v, ...)`` read around the cycle
    from the smaller of the two degree-3 vertices."""
    cycles = []
    for (u, v), chains in _chains_between_cubic(g).items():
        for i in range(len(chains)):
            for j in range(i + 1, len(chains)):
                a, b = chains[i], chains[j]
                cycles.append(tuple(a[:-1]) + tuple(b[::-1][:-1]))
    return cycles


def bull_cycle_parts(g: Graph) -> list[tuple]:
    """Like :func:`bull_cycles` but as ``(u, v, chain_a, chain_b)``."""
    out = []
    for (u, v), chains in _chains_between_cubic(g).items():
        for i in range(len(chains)):
            for j in range(i + 1, len(chains)):
                out.append((u, v, chains[i], chains[j]))
    return out


def is_bull_pair(g: Graph, u, v) -> bool:
    """Degree-3 endpoints of a bull triangle: adjacent, both of degree 3,
    with a common neighbour of degree 2."""
    if u not in g or v not in g:
        raise GraphError(f"unknown vertex in pair ({u!r}, {v!r})")
    if u == v or g.degree(u) != 3 or g.degree(v) != 3 or not g.has_edge(u, v):
        return False
    return any(g.degree(w) == 2 for w in g.neighbors(u) & g.neighbors(v))


def bull_pairs(g: Graph) -> frozenset:
    return frozenset(frozenset((u, v)) for u, v in map(tuple, g.edges())
                     if is_bull_pair(g, u, v))


def analyze(g: Graph) -> StructureReport:
    v4 = high_degree_set(g)
    return StructureReport(
        v4=v4,
        high=sum(g.degree(v) for v in v4),
        pan_cycles=pan_cycles(g),
        bull_cycles=bull_cycles(g),
        bull_pairs=bull_pairs(g),
    )


def diamond_arcs(g: Graph):
    """If ``g`` is a subdivided diamond return ``(x, y, arcs)`` with three
    x-to-y arcs, else None."""
    cubic = [v for v in g.sorted_vertices() if g.degree(v) == 3]
    if len(cubic) != 2 or any(g.degree(v) != 2 for v in g.vertices if v not in cubic):
        return None
    x, y = cubic
    arcs = [walk_chain(g, x, w) for w in sorted(g.neighbors(x), key=vkey)]
    if any(a[-1] != y for a in arcs):
        return None
    if sum(len(a) - 1 for a in arcs) != g.m:
        return None
    return x, y, arcs


def classify_component(g: Graph) -> ComponentKind:
    if not is_connected(g):
        raise GraphError("classify_component needs a connected graph")
    if g.m and all(g.degree(v) == 2 for v in g.vertices):
        return ComponentKind.CYCLE
    if diamond_arcs(g) is not None:
        return ComponentKind.SUBDIVIDED_DIAMOND
    return ComponentKind.OTHER
