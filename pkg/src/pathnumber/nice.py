"""Reduce a connected non-subcubic graph to a nice graph.

Pan cycles are cut off (each costs exactly one extra path) and every bull
cycle that is not a triangle is shortened to one. The rewrite steps are
logged so that a partition of the nice graph can be replayed back onto the
original graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, GraphError, is_connected, path_edges, vkey
from .structures import bull_cycle_parts, pan_cycles


@dataclass(frozen=True)
class PanRemoval:
    """``cycle`` starts at its degree-3 vertex."""
    cycle: tuple

    kind = "pan"


@dataclass(frozen=True)
class BullShortening:
    u: object
    v: object
    w: object
    arc_uv: tuple   # u .. v, avoids w
    arc_uw: tuple   # u .. w
    arc_vw: tuple   # v .. w

    kind = "bull"


@dataclass
class NiceResult:
    nice_graph: Graph
    pan_offset: int
    replay_log: list = field(default_factory=list)


def _is_nice_input(g: Graph):
    if not is_connected(g):
        raise GraphError("make_nice needs a connected graph")
    if g.max_degree() < 4:
        raise GraphError("make_nice needs a vertex of degree at least 4")


def _shorten(g: Graph, u, v, chain_a: list, chain_b: list):
    interior = [x for x in chain_a[1:-1] + chain_b[1:-1]]
    w = min(interior, key=vkey)
    if w in chain_a:
        through_w, other = chain_a, chain_b
    else:
        through_w, other = chain_b, chain_a
    i = through_w.index(w)
    step = BullShortening(u=u, v=v, w=w, arc_uv=tuple(other),
                          arc_uw=tuple(through_w[:i + 1]),
                          arc_vw=tuple(through_w[i:][::-1]))
    drop = [x for x in interior if x != w]
    h = g.without_edges(path_edges(chain_a) + path_edges(chain_b)).without_vertices(drop)
    h = h.with_edges([(u, v), (v, w), (u, w)])
    return h, step


def make_nice(g: Graph) -> NiceResult:
    """Transform ``g`` into a nice graph, tracking the pn offset."""
    _is_nice_input(g)
    log: list = []
    offset = 0
    while True:
        pans = pan_cycles(g)
        if not pans:
            break
        for cyc in pans:
            x = cyc[0]
            g = g.without_edges(path_edges(list(cyc) + [x])).without_vertices(cyc[1:])
            log.append(PanRemoval(tuple(cyc)))
            offset += 1
    while True:
        todo = [(u, v, a, b) for u, v, a, b in bull_cycle_parts(g) if len(a) + len(b) > 5]
        if not todo:
            break
        todo.sort(key=lambda t: min(vkey(x) for x in t[2] + t[3]))
        u, v, a, b = todo[0]
        g, step = _shorten(g, u, v, a, b)
        log.append(step)
    return NiceResult(nice_graph=g, pan_offset=offset, replay_log=log)


def _expand_edges(path: tuple, table: dict) -> tuple:
    out = [path[0]]
    for a, b in zip(path, path[1:]):
        arc = table.get((a, b))
        if arc is None:
            out.append(b)
        else:
            out.extend(arc[1:])
    return tuple(out)


def replay_witness(nice_partition, log: list) -> list[tuple]:
    """Map a partition of the nice graph back through the rewrite log."""
    paths = [tuple(p) for p in nice_partition]
    for step in reversed(log):
        if isinstance(step, BullShortening):
            table = {}
            for (a, b), arc in (((step.u, step.v), step.arc_uv),
                                ((step.u, step.w), step.arc_uw),
                                ((step.v, step.w), step.arc_vw)):
                table[(a, b)] = arc
                table[(b, a)] = arc[::-1]
            paths = [_expand_edges(p, table) for p in paths]
        elif isinstance(step, PanRemoval):
            cyc = list(step.cycle)
            x = cyc[0]
            ends = [i for i, p in enumerate(paths) if x in (p[0], p[-1])]
            if len(ends) != 1:
                raise GraphError(f"partition does not end exactly one path at {x!r}")
            i = ends[0]
            p = list(paths[i]) if paths[i][-1] == x else list(paths[i])[::-1]
            paths[i] = tuple(p + [cyc[1]])
            paths.append(tuple(cyc[1:] + [x]))
        else:
            raise TypeError(f"unknown log entry {step!r}")
    return paths


# JSON


def _tok(v):
    return v if isinstance(v, (int, str)) else str(v)


def log_to_json(log: list) -> str:
    out = []
    for step in log:
        if isinstance(step, PanRemoval):
            out.append({"kind": "pan", "cycle": [_tok(v) for v in step.cycle]})
        else:
            out.append({"kind": "bull", "u": _tok(step.u), "v": _tok(step.v), "w": _tok(step.w),
                        "arc_uv": [_tok(x) for x in step.arc_uv],
                        "arc_uw": [_tok(x) for x in step.arc_uw],
                        "arc_vw": [_tok(x) for x in step.arc_vw]})
    return json.dumps(out)


def log_from_json(text: str) -> list:
    log = []
    for rec in json.loads(text):
        if rec["kind"] == "pan":
            log.append(PanRemoval(tuple(rec["cycle"])))
        elif rec["kind"] == "bull":
            log.append(BullShortening(rec["u"], rec["v"], rec["w"], tuple(rec["arc_uv"]),
                                      tuple(rec["arc_uw"]), tuple(rec["arc_vw"])))
        else:
            raise ValueError(f"unknown log record kind {rec['kind']!r}")
    return log
