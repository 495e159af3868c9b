"""Exact path number and optimal witness partitions for arbitrary graphs.

Each component is solved on its own. Subcubic components use the closed
formula; the rest are made nice and then minimise

    (odd(G0) + odd_number(T, d)) / 2 + |T|

over feasible patterns, plus one path per removed pan cycle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .feasibility import check_feasible, realize_family
from .graph import (Graph, GraphError, components, odd_count, path_edges, remove_paths,
                    strip_isolated, verify_partition, vkey)
from .nice import make_nice, replay_witness
from .patterns import (Pattern, _Bound, effective_ell_cap, generate, is_covering_family,
                       objective, v4_edges)
from .structures import (ComponentKind, bull_pairs, classify_component, diamond_arcs,
                         high_degree_set, pan_cycles)
from .subcubic import partition_subcubic, pn_subcubic

__all__ = ["path_number", "path_partition", "extend_for_witness", "verify_partition",
           "solve_component", "SolverError", "Solution"]

log = logging.getLogger(__name__)


class SolverError(RuntimeError):
    pass


@dataclass
class Solution:
    """Outcome of the pattern search on a nice graph."""
    value: int
    pattern: Pattern | None = None
    witness: object = None
    stats: dict = field(default_factory=dict)


def search_patterns(g0: Graph, lmax: int | None = None, on_pattern=None) -> Solution:
    """Minimise the pattern objective over feasible patterns of nice ``g0``."""
    v4 = high_degree_set(g0)
    base_odd = odd_count(g0)
    floor = max(base_odd // 2, 1)
    cap = effective_ell_cap(g0, v4, lmax)
    n_edges = len(v4_edges(g0, v4))
    bound = _Bound()
    best = Solution(value=-1)
    stats = {"patterns": 0, "feasibility_checks": 0}
    for t in range(1, n_edges + 1):
        if t >= bound.value:
            break
        for ell in range(cap + 1):
            for p in generate(g0, v4, t, ell, solver=True, bound=bound, base_odd=base_odd):
                stats["patterns"] += 1
                if on_pattern is not None:
                    on_pattern(p)
                val = objective(g0, v4, p, base_odd)
                if val >= bound.value:
                    continue
                stats["feasibility_checks"] += 1
                w = check_feasible(g0, v4, p, validate=False)
                if w is None:
                    continue
                bound.value = val
                best = Solution(val, p, w)
                if val == floor:
                    best.stats = stats
                    return best
    if best.pattern is None:
        raise SolverError("no feasible pattern within the variable cap")
    best.stats = stats
    return best


def _component_value(c: Graph, lmax) -> int:
    if c.m == 0:
        return 0
    if c.max_degree() <= 3:
        return pn_subcubic(c)
    nice = make_nice(c)
    return search_patterns(nice.nice_graph, lmax).value + nice.pan_offset


def path_number(g: Graph, lmax: int | None = None) -> int:
    return sum(_component_value(c, lmax) for c in components(g))


def solve_component(c: Graph, lmax: int | None = None) -> list[tuple]:
    """An optimal partition of one connected graph."""
    if c.m == 0:
        return []
    if c.max_degree() <= 3:
        return partition_subcubic(c)
    nice = make_nice(c)
    g0 = nice.nice_graph
    v4 = high_degree_set(g0)
    sol = search_patterns(g0, lmax)
    q = realize_family(g0, v4, sol.pattern, sol.witness)
    q2 = extend_for_witness(g0, v4, q)
    rest = remove_paths(g0, q2)
    paths = list(q2)
    for comp in components(strip_isolated(rest)):
        paths.extend(partition_subcubic(comp))
    if len(paths) != sol.value or not verify_partition(g0, paths):
        raise AssertionError("witness on the nice graph does not match the optimum")
    out = replay_witness(paths, nice.replay_log)
    if len(out) != sol.value + nice.pan_offset:
        raise AssertionError("replayed witness has the wrong size")
    return out


def path_partition(g: Graph, lmax: int | None = None) -> list[tuple]:
    out = []
    for c in components(g):
        out.extend(solve_component(c, lmax))
    if not verify_partition(g, out):
        raise AssertionError("assembled partition does not verify")
    return out


# witness extension


def _ring(c: Graph) -> list:
    """Vertices of a cycle graph in cyclic order from its smallest vertex."""
    start = c.sorted_vertices()[0]
    ring = [start]
    prev, cur = None, start
    while True:
        nxt = min((w for w in c.neighbors(cur) if w != prev), key=vkey)
        if nxt == start:
            break
        ring.append(nxt)
        prev, cur = cur, nxt
    return ring


def _arc(ring: list, a, b) -> list:
    """The ring walked forward from ``a`` to ``b`` inclusive."""
    i, j = ring.index(a), ring.index(b)
    if i <= j:
        return ring[i:j + 1]
    return ring[i:] + ring[:j + 1]


def _ending_at(q: list, v) -> int:
    hits = [i for i, p in enumerate(q) if v in (p[0], p[-1])]
    if len(hits) != 1:
        raise AssertionError(f"expected exactly one path ending at {v!r}, found {len(hits)}")
    return hits[0]


def _toward(p, v) -> list:
    """Path ``p`` oriented to finish at endpoint ``v``."""
    return list(p) if p[-1] == v else list(p)[::-1]


def _kill_pan(g: Graph, q: list, cyc: tuple) -> None:
    w = cyc[0]
    v = next(u for u in sorted(cyc[1:], key=vkey) if g.degree(u) != 2)
    i = _ending_at(q, v)
    p = _toward(q[i], v)                         # v' .. v
    ring = list(cyc)
    v_end = p[0]
    arc = _arc(ring, v, w)
    if v_end in arc:
        arc = _arc(ring, w, v)[::-1]
    q[i] = tuple(p + arc[1:])


def _kill_cycle(g: Graph, q: list, c: Graph) -> None:
    ring = _ring(c)
    wset = [u for u in ring if g.degree(u) != 2]
    pick = None
    for a in range(len(wset)):
        for b in range(a + 1, len(wset)):
            if _ending_at(q, wset[a]) != _ending_at(q, wset[b]):
                pick = (wset[a], wset[b])
                break
        if pick:
            break
    if pick is None:
        raise AssertionError("cycle component whose attachments all lie on one path")
    x, y = pick
    ix, iy = _ending_at(q, x), _ending_at(q, y)
    px, py = _toward(q[ix], x), _toward(q[iy], y)     # x' .. x, y' .. y
    xp, yp = px[0], py[0]
    on = set(ring)
    if xp not in on or yp not in on:
        if yp in on:
            x, y, ix, iy, px, py, xp, yp = y, x, iy, ix, py, px, yp, xp
        cx = _arc(ring, x, y)
        if xp in cx:
            cx = _arc(ring, y, x)[::-1]
        cy = _arc(ring, y, x) if cx == _arc(ring, x, y) else _arc(ring, x, y)[::-1]
        q[ix] = tuple(px + cx[1:])
        q[iy] = tuple(py + cy[1:])
        return
    fwd = _arc(ring, x, ring[ring.index(x) - 1])     # whole ring from x
    flip = [x] + fwd[1:][::-1]
    a, b, k = fwd.index(xp), fwd.index(y), fwd.index(yp)
    if min(b, k) < a < max(b, k):
        # crossing chords: read the ring as x, y, x', y'
        if b > a:
            fwd = flip
        cyc = fwd + [x]
        ky, kxp, kyp = cyc.index(y), cyc.index(xp), cyc.index(yp)
        c1, c2, c3, c4 = cyc[:ky + 1], cyc[ky:kxp + 1], cyc[kxp:kyp + 1], cyc[kyp:]
        new_x = c1[::-1] + px[::-1][1:] + c3[1:]      # y C1 x Px x' C3 y'
        new_y = c2[::-1] + py[::-1][1:] + c4[1:]      # x' C2 y Py y' C4 x
    else:
        # nested chords: read the ring as x, x', y, y', renaming the ends
        # of P_y if they come the other way round
        if a > b:
            fwd = flip
        if fwd.index(yp) < fwd.index(y):
            y, yp, py = yp, y, py[::-1]
        cyc = fwd + [x]
        ky, kxp, kyp = cyc.index(y), cyc.index(xp), cyc.index(yp)
        c_y = cyc[kxp:kyp + 1]                        # x' .. y .. y'
        c_x = cyc[kyp:] + cyc[1:kxp + 1]              # y' .. x .. x'
        new_x = px[::-1] + c_y[1:]                    # x Px x' C_y y'
        new_y = py[::-1] + c_x[1:]                    # y Py y' C_x x'
    q[ix] = tuple(new_x)
    q[iy] = tuple(new_y)


def _kill_diamond(g: Graph, q: list, d: Graph) -> None:
    x, y, arcs = diamond_arcs(d)
    z = None
    for arc in arcs:
        for u in arc[1:-1]:
            if g.degree(u) != 2 and (z is None or vkey(u) < vkey(z)):
                z, a3 = u, arc
    if z is None:
        raise AssertionError("diamond component with no attachment")
    a1, a2 = [arc for arc in arcs if arc is not a3]
    k = a3.index(z)
    d_y = a1 + a3[::-1][1:len(a3) - k]           # x A1 y A3 z
    d_x = a2[::-1] + a3[1:k + 1]                  # y A2 x A3 z
    i = _ending_at(q, z)
    p = _toward(q[i], z)                          # z' .. z
    zp = p[0]
    piece = d_y if zp not in d_y else d_x
    q[i] = tuple(p + piece[::-1][1:])


def _bad_components(h: Graph):
    for c in components(strip_isolated(h)):
        kind = classify_component(c)
        if kind is not ComponentKind.OTHER:
            yield kind, c


def extend_for_witness(g: Graph, v4, q) -> list[tuple]:
    """Extend paths of the bull-free covering family ``q`` so that G - q has
    no pan cycle and no cycle or subdivided-diamond component."""
    v4 = frozenset(v4)
    q = [tuple(p) for p in q]
    if not is_covering_family(g, v4, q):
        raise GraphError("not a covering family")
    bulls = bull_pairs(g)
    if any(frozenset((p[0], p[-1])) in bulls for p in q):
        raise GraphError("family is not bull-free")
    start_odd = odd_count(remove_paths(g, q))
    size = len(q)
    guard = g.m + 1

    for _ in range(guard):
        pans = pan_cycles(remove_paths(g, q))
        if not pans:
            break
        _kill_pan(g, q, pans[0])
    for _ in range(guard):
        bad = [c for kind, c in _bad_components(remove_paths(g, q)) if kind is ComponentKind.CYCLE]
        if not bad:
            break
        _kill_cycle(g, q, bad[0])
    for _ in range(guard):
        bad = [c for kind, c in _bad_components(remove_paths(g, q))
               if kind is ComponentKind.SUBDIVIDED_DIAMOND]
        if not bad:
            break
        _kill_diamond(g, q, bad[0])

    rest = remove_paths(g, q)
    assert len(q) == size, "family size changed"
    assert is_covering_family(g, v4, q), "extended family is not covering"
    assert not any(frozenset((p[0], p[-1])) in bulls for p in q), "extension created a bull pair"
    assert odd_count(rest) == start_odd, "odd count changed"
    assert not pan_cycles(rest), "pan cycle survived"
    assert not list(_bad_components(rest)), "cycle or diamond component survived"
    return q
