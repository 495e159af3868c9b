"""Path number and optimal partitions of connected subcubic graphs.

A connected graph of maximum degree 3 needs exactly two paths when it is a
cycle or a subdivided diamond, and odd/2 + pan paths otherwise. The witness
follows the inductive construction: peel pan cycles, dissolve degree-2
vertices, and settle the all-odd base case by a bounded search.
"""

from __future__ import annotations

from collections import deque

from .graph import (Graph, GraphError, components, is_connected, odd_count,
                    path_edges, strip_isolated, vkey)
from .structures import ComponentKind, classify_component, diamond_arcs, pan_cycles


def _check_input(g: Graph):
    if g.max_degree() > 3:
        raise GraphError("graph is not subcubic")
    if not is_connected(g):
        raise GraphError("graph is not connected")


def pan_count(g: Graph) -> int:
    return len(pan_cycles(g))


def pn_subcubic(g: Graph) -> int:
    _check_input(g)
    if g.m == 0:
        return 0
    if classify_component(g) is not ComponentKind.OTHER:
        return 2
    return odd_count(g) // 2 + pan_count(g)


def reduce_pan_cycle(g: Graph, cycle) -> Graph:
    """Delete the edges of a pan cycle and drop the vertices left isolated."""
    cycle = tuple(cycle)
    if frozenset(cycle) not in {frozenset(c) for c in pan_cycles(g)}:
        raise GraphError(f"{cycle!r} is not a pan cycle")
    ring = list(cycle) + [cycle[0]]
    return strip_isolated(g.without_edges(path_edges(ring)))


def split_cycle(g: Graph) -> list[tuple]:
    """Two paths covering a cycle graph, split at its two smallest vertices."""
    start = g.sorted_vertices()[0]
    ring = [start]
    prev, cur = None, start
    while True:
        nxt = min((w for w in g.neighbors(cur) if w != prev), key=vkey)
        if nxt == start:
            break
        ring.append(nxt)
        prev, cur = cur, nxt
    k = len(ring) // 2
    return [tuple(ring[:k + 1]), tuple(ring[k:] + [start])]


def split_diamond(g: Graph) -> list[tuple]:
    x, y, arcs = diamond_arcs(g)
    arcs = sorted(arcs, key=len)
    a1, a2, a3 = arcs
    # a3 is the longest arc and has an interior vertex z
    z_at = len(a3) // 2
    to_x = a3[:z_at + 1][::-1]            # z .. x
    to_y = a3[z_at:]                      # z .. y
    return [tuple(to_x + a1[1:]), tuple(to_y + a2[::-1][1:])]


def _replace_edge(paths: list, u, v, detour: list) -> list:
    """Replace edge u-v in whichever path uses it by ``detour`` (u .. v)."""
    out = []
    hit = False
    for p in paths:
        p = list(p)
        for i in range(len(p) - 1):
            if {p[i], p[i + 1]} == {u, v}:
                seg = detour if p[i] == u else detour[::-1]
                p = p[:i] + seg + p[i + 2:]
                hit = True
                break
        out.append(tuple(p))
    if not hit:
        raise AssertionError(f"edge {u!r}-{v!r} not covered")
    return out


def _path_ending_at(paths: list, v) -> int:
    for i, p in enumerate(paths):
        if p[0] == v or p[-1] == v:
            return i
    raise AssertionError(f"no path ends at {v!r}")


def _oriented_from(p, v) -> list:
    """Path ``p`` as a list starting at endpoint ``v``."""
    return list(p) if p[0] == v else list(p)[::-1]


def _all_odd_partition(g: Graph) -> list[tuple]:
    """Partition a connected graph whose degrees are all odd into odd/2 paths.

    Every vertex is then the endpoint of exactly one path, which the search
    uses for pruning: a path starts at the smallest vertex not yet used as an
    endpoint and may stop only at an unused vertex.
    """
    target = odd_count(g) // 2
    order = g.sorted_vertices()
    uncovered = g.edge_set()
    used_end: set = set()
    result: list = []
    free_deg = {v: g.degree(v) for v in g.vertices}

    def start_next() -> bool:
        if not uncovered:
            return len(result) == target
        if len(result) >= target:
            return False
        s = next(v for v in order if v not in used_end)
        if free_deg[s] == 0:
            return False
        used_end.add(s)
        if grow([s], {s}):
            return True
        used_end.discard(s)
        return False

    def grow(path, on_path) -> bool:
        tail = path[-1]
        if len(path) > 1 and tail not in used_end:
            used_end.add(tail)
            result.append(tuple(path))
            if start_next():
                return True
            result.pop()
            used_end.discard(tail)
        for w in sorted(g.neighbors(tail), key=vkey):
            e = frozenset((tail, w))
            if e in uncovered and w not in on_path:
                uncovered.discard(e)
                free_deg[tail] -= 1
                free_deg[w] -= 1
                path.append(w)
                on_path.add(w)
                if grow(path, on_path):
                    return True
                on_path.discard(w)
                path.pop()
                free_deg[tail] += 1
                free_deg[w] += 1
                uncovered.add(e)
        return False

    if g.m == 0:
        return []
    if not start_next():
        raise AssertionError("all-odd graph without an odd/2 partition")
    return result


def _xy_path(g: Graph, x, y) -> list:
    prev = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in sorted(g.neighbors(u), key=vkey):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    path = [y]
    while path[-1] != x:
        path.append(prev[path[-1]])
    return path[::-1]


def partition_subcubic(g: Graph) -> list[tuple]:
    """An optimal path partition of a connected subcubic graph."""
    _check_input(g)
    return _partition(strip_isolated(g))


def _partition(g: Graph) -> list[tuple]:
    if g.m == 0:
        return []
    kind = classify_component(g)
    if kind is ComponentKind.CYCLE:
        return split_cycle(g)
    if kind is ComponentKind.SUBDIVIDED_DIAMOND:
        return split_diamond(g)

    pans = pan_cycles(g)
    if pans:
        cyc = list(pans[0])
        x = cyc[0]
        rest = reduce_pan_cycle(g, cyc)
        paths = _partition(rest)
        i = _path_ending_at(paths, x)
        p = _oriented_from(paths[i], x)[::-1]          # x' .. x
        y = cyc[1]
        around = cyc[1:] + [x]                          # y .. x the long way
        paths[i] = tuple(p + [y])
        paths.append(tuple(around))
        return paths

    twos = [v for v in g.sorted_vertices() if g.degree(v) == 2]
    if not twos:
        return _all_odd_partition(g)

    v = twos[0]
    x, y = sorted(g.neighbors(v), key=vkey)
    if not g.has_edge(x, y):
        reduced = g.without_vertices([v]).with_edges([(x, y)])
        paths = _partition(reduced)
        return _replace_edge(paths, x, y, [x, v, y])

    if g.degree(x) != 3 or g.degree(y) != 3:
        raise AssertionError("triangle on a degree-2 vertex should be a pan cycle")
    rest = g.without_vertices([v]).without_edges([(x, y)])
    parts = components(rest)
    if len(parts) == 2:
        gx, gy = (parts if x in parts[0] else parts[::-1])
        px_paths = _partition(strip_isolated(gx))
        py_paths = _partition(strip_isolated(gy))
        i = _path_ending_at(px_paths, x)
        j = _path_ending_at(py_paths, y)
        px = _oriented_from(px_paths[i], x)[::-1]       # x' .. x
        py = _oriented_from(py_paths[j], y)[::-1]       # y' .. y
        out = [p for k, p in enumerate(px_paths) if k != i]
        out += [p for k, p in enumerate(py_paths) if k != j]
        out.append(tuple(px + [v, y]))
        out.append(tuple(py + [x]))
        return out

    p = _xy_path(rest, x, y)
    inner = [w for w in p[1:-1] if rest.degree(w) == 3]
    if not inner:
        raise AssertionError("graph is a subdivided diamond")
    remaining = rest.without_edges(path_edges(p))
    paths = []
    for comp in components(strip_isolated(remaining)):
        paths.extend(_partition(comp))
    w = inner[0]
    i = _path_ending_at(paths, w)
    q = _oriented_from(paths[i], w)                      # w .. z
    z = q[-1]
    del paths[i]
    if z not in p:
        wi = p.index(w)
        first = q[::-1] + p[:wi][::-1] + [y]             # z Q w P x y
        second = [x, v] + p[::-1][:len(p) - wi]          # x v y P w
        return paths + [tuple(first), tuple(second)]
    if p.index(z) > p.index(w):
        # mirror so that z lies between x and w
        p = p[::-1]
        x, y = y, x
    zi, wi = p.index(z), p.index(w)
    first = q + p[:zi][::-1] + [v, y]                    # w Q z P x v y
    second = p[zi:] + [x]                                # z P y x
    return paths + [tuple(first), tuple(second)]
