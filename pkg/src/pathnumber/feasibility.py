"""Pattern feasibility by direct search.

A pattern is feasible when its variables can be mapped injectively onto
vertices outside N[V4] of the demanded degrees, the ends pairs can be joined
by internally vertex-disjoint paths in G - V4, and no trace ends on a bull
pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError, vkey
from .patterns import Pattern, is_var, pattern_valid, trace_pairs, _is_edge_pair
from .structures import closed_neighborhood, is_bull_pair


@dataclass
class FeasibilityWitness:
    """``assignment`` maps each Var to a vertex; ``connecting_paths`` maps
    each ends pair (a frozenset of symbols) to a vertex path."""
    assignment: dict = field(default_factory=dict)
    connecting_paths: dict = field(default_factory=dict)

    def image(self, s):
        return self.assignment[s] if is_var(s) else s


# disjoint paths


def _reachable(h: Graph, s, t, free) -> bool:
    if h.has_edge(s, t):
        return True
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in h.neighbors(u):
            if w == t:
                return True
            if w not in seen and w in free:
                seen.add(w)
                queue.append(w)
    return False


def disjoint_paths(h: Graph, pairs, forbidden=()):
    """Paths joining each pair so that no vertex of one path is an internal
    vertex of another. Vertices in ``forbidden`` are never used internally.
    Returns the list of paths in input order, or None."""
    pairs = [tuple(p) for p in pairs]
    for s, t in pairs:
        for v in (s, t):
            if v not in h:
                raise GraphError(f"unknown terminal {v!r}")
    keys = [frozenset(p) for p in pairs]
    if len(set(keys)) != len(keys):
        raise GraphError("repeated terminal pair")
    terminals = {v for p in pairs for v in p}
    free = {v for v in h.vertices if v not in terminals} - set(forbidden)
    routed: list = [None] * len(pairs)

    def options(i) -> int:
        s, t = pairs[i]
        return sum(1 for w in h.neighbors(s) if w == t or w in free)

    def solve() -> bool:
        todo = [i for i in range(len(pairs)) if routed[i] is None]
        if not todo:
            return True
        for i in todo:
            if not _reachable(h, *pairs[i], free):
                return False
        i = min(todo, key=lambda j: (options(j), j))
        s, t = pairs[i]
        if s == t:
            routed[i] = (s,)
            if solve():
                return True
            routed[i] = None
            return False
        path = [s]

        def walk(u) -> bool:
            for w in sorted(h.neighbors(u), key=vkey):
                if w == t:
                    path.append(t)
                    routed[i] = tuple(path)
                    if solve():
                        return True
                    routed[i] = None
                    path.pop()
                elif w in free:
                    free.discard(w)
                    path.append(w)
                    if walk(w):
                        return True
                    path.pop()
                    free.add(w)
            return False

        return walk(s)

    return list(routed) if solve() else None


# feasibility


def _ends_pairs(p: Pattern, v4) -> list[tuple]:
    out = []
    for t in p.traces:
        for a, b in trace_pairs(t):
            if not _is_edge_pair(a, b, v4):
                out.append((a, b))
    return out


def check_feasible(g: Graph, v4, p: Pattern, *, validate: bool = True):
    """A :class:`FeasibilityWitness` for ``p`` or None."""
    v4 = frozenset(v4)
    if validate and not pattern_valid(g, v4, p):
        raise GraphError("invalid pattern")
    closed = closed_neighborhood(g, v4)
    nbr = closed - v4
    h = g.without_vertices(v4)
    pairs = _ends_pairs(p, v4)
    outside = [v for v in g.sorted_vertices() if v not in closed]
    xs = sorted({s for t in p.traces for s in t if is_var(s)})
    cands = {x: [v for v in outside if g.degree(v) == p.degree_of(x)] for x in xs}
    if any(not c for c in cands.values()):
        return None
    ends_of = [(t[0], t[-1]) for t in p.traces]
    f: dict = {}
    used: set = set()

    def img(s):
        return f.get(s) if is_var(s) else s

    def pair_ok(a, b) -> bool:
        ia, ib = img(a), img(b)
        if ia is None or ib is None:
            return True
        if ia == ib:
            return False
        free = set(h.vertices) - nbr - set(f.values())
        free.discard(ia)
        free.discard(ib)
        return _reachable(h, ia, ib, free)

    def bull_ok(a, b) -> bool:
        ia, ib = img(a), img(b)
        if ia is None or ib is None or ia == ib:
            return True
        return not is_bull_pair(g, ia, ib)

    def touched_ok(x) -> bool:
        for a, b in pairs:
            if x in (a, b) and not pair_ok(a, b):
                return False
        for a, b in ends_of:
            if x in (a, b) and not bull_ok(a, b):
                return False
        return True

    for a, b in ends_of:
        if not bull_ok(a, b):
            return None
    for a, b in pairs:
        if not pair_ok(a, b):
            return None

    def assign(k: int):
        if k == len(xs):
            real = [(img(a), img(b)) for a, b in pairs]
            routes = disjoint_paths(h, real, forbidden=nbr)
            if routes is None:
                return None
            conn = {frozenset((a, b)): r for (a, b), r in zip(pairs, routes)}
            return FeasibilityWitness(dict(f), conn)
        x = xs[k]
        for v in cands[x]:
            if v in used:
                continue
            f[x] = v
            used.add(v)
            if touched_ok(x):
                w = assign(k + 1)
                if w is not None:
                    return w
            used.discard(v)
            del f[x]
        return None

    return assign(0)


def realize_family(g: Graph, v4, p: Pattern, w: FeasibilityWitness) -> list[tuple]:
    """Concatenate connecting paths and V4 edges in trace order."""
    v4 = frozenset(v4)
    family = []
    for t in p.traces:
        path = [w.image(t[0])]
        for a, b in trace_pairs(t):
            ia, ib = w.image(a), w.image(b)
            if _is_edge_pair(a, b, v4):
                if not g.has_edge(ia, ib):
                    raise GraphError(f"trace pair {a!r}-{b!r} is not an edge")
                path.append(ib)
                continue
            r = w.connecting_paths.get(frozenset((a, b)))
            if r is None:
                raise GraphError(f"no connecting path for {a!r}-{b!r}")
            r = list(r) if r[0] == ia else list(r)[::-1]
            if r[0] != ia or r[-1] != ib:
                raise GraphError(f"connecting path does not join {ia!r} and {ib!r}")
            path.extend(r[1:])
        if len(set(path)) != len(path):
            raise GraphError(f"realized walk {path!r} repeats a vertex")
        family.append(tuple(path))
    return family
