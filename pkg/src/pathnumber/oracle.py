"""Brute-force ground truth and seeded instance generators.

Nothing here depends on the structural machinery in the rest of the package;
the oracle must stay independent of the code it checks.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, GraphError, edge_key

DEFAULT_EDGE_CAP = 20


class OracleLimitError(GraphError):
    pass


def _edge_tables(g: Graph):
    edges = sorted(g.edges(), key=edge_key)
    eid = {e: i for i, e in enumerate(edges)}
    incident = {v: 0 for v in g.vertices}
    for e, i in eid.items():
        for v in e:
            incident[v] |= 1 << i
    adj = {v: [(w, eid[frozenset((v, w))]) for w in g.neighbors(v)] for v in g.vertices}
    return edges, incident, adj


def brute_partition(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> list[tuple]:
    """A minimum path partition found by exhaustive branch and bound.

    Paths are opened on the smallest uncovered edge and grown first at the
    tail, then at the head, so each path is generated in exactly one
    orientation.
    """
    if g.m > cap:
        raise OracleLimitError(f"{g.m} edges exceeds the oracle cap of {cap}")
    if g.m == 0:
        return []
    edges, incident, adj = _edge_tables(g)
    full = (1 << len(edges)) - 1
    verts = list(g.vertices)

    def lower(mask: int) -> int:
        odd = sum(1 for v in verts if bin(mask & incident[v]).count("1") % 2)
        return max(odd // 2, 1) if mask else 0

    floor = lower(full)
    best: list = [len(edges) + 1, None]
    chosen: list = []

    def open_path(mask: int) -> bool:
        if not mask:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), [tuple(p) for p in chosen]
            return best[0] == floor
        if len(chosen) + lower(mask) >= best[0]:
            return False
        i = (mask & -mask).bit_length() - 1
        a, b = tuple(sorted(edges[i], key=g.index.__getitem__))
        path = [a, b]
        chosen.append(path)
        done = grow_tail(mask & ~(1 << i), path, {a, b})
        chosen.pop()
        return done

    def grow_tail(mask, path, on_path) -> bool:
        if grow_head(mask, path, on_path):
            return True
        tail = path[-1]
        for w, i in adj[tail]:
            if mask >> i & 1 and w not in on_path:
                path.append(w)
                on_path.add(w)
                done = grow_tail(mask & ~(1 << i), path, on_path)
                on_path.discard(w)
                path.pop()
                if done:
                    return True
        return False

    def grow_head(mask, path, on_path) -> bool:
        if open_path(mask):
            return True
        head = path[0]
        for w, i in adj[head]:
            if mask >> i & 1 and w not in on_path:
                path.insert(0, w)
                on_path.add(w)
                done = grow_head(mask & ~(1 << i), path, on_path)
                on_path.discard(w)
                path.pop(0)
                if done:
                    return True
        return False

    open_path(full)
    return best[1]


def brute_pn(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> int:
    """Exact path number by exhaustive search (small graphs only)."""
    return len(brute_partition(g, cap))


def sen_bruteforce(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> int:
    """Fewest edge deletions that make ``g`` subcubic."""
    if g.m > cap:
        raise OracleLimitError(f"{g.m} edges exceeds the oracle cap of {cap}")
    excess = {v: g.degree(v) - 3 for v in g.vertices if g.degree(v) > 3}
    if not excess:
        return 0
    candidates = sorted((e for e in g.edges() if any(v in excess for v in e)), key=edge_key)
    need = sum(excess.values())
    for k in range((need + 1) // 2, len(candidates) + 1):
        for subset in combinations(candidates, k):
            left = dict(excess)
            for e in subset:
                for v in e:
                    if v in left:
                        left[v] -= 1
            if all(x <= 0 for x in left.values()):
                return k
    raise AssertionError("unreachable: deleting every candidate edge suffices")


# generators

FAMILIES = ("random_gnm", "random_near_subcubic", "wheel", "star",
            "pan_gadget", "bull_gadget", "complete")


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def random_gnm(n: int, m: int, seed: int = 0) -> Graph:
    _require(n >= 0 and 0 <= m <= n * (n - 1) // 2, f"invalid gnm parameters n={n} m={m}")
    rng = random.Random(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    return Graph(range(1, n + 1), rng.sample(pairs, m))


def random_subcubic(n: int, rng: random.Random) -> list[tuple]:
    pairs = list(combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    target = rng.randint(max(n - 1, 0), 3 * n // 2) if n else 0
    deg = [0] * (n + 1)
    edges = []
    for u, v in pairs:
        if len(edges) >= target:
            break
        if deg[u] < 3 and deg[v] < 3:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return edges


def random_near_subcubic(n: int, extra: int = 1, seed: int = 0) -> Graph:
    """A random subcubic graph on 1..n plus ``extra`` further random edges."""
    _require(n >= 1 and extra >= 0, f"invalid parameters n={n} extra={extra}")
    rng = random.Random(seed)
    edges = random_subcubic(n, rng)
    present = {frozenset(e) for e in edges}
    free = [p for p in combinations(range(1, n + 1), 2) if frozenset(p) not in present]
    _require(extra <= len(free), f"cannot add {extra} edges to n={n}")
    edges.extend(rng.sample(free, extra))
    return Graph(range(1, n + 1), edges)


def wheel(n: int) -> Graph:
    """Hub 0 joined to a rim cycle 1..n-1 (n vertices in total)."""
    _require(n >= 4, "a wheel needs at least 4 vertices")
    rim = list(range(1, n))
    edges = [(0, r) for r in rim] + [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return Graph(range(n), edges)


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 and leaves 1..n."""
    _require(n >= 0, "star needs n >= 0")
    return Graph(range(n + 1), [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    _require(n >= 0, "complete needs n >= 0")
    return Graph(range(1, n + 1), combinations(range(1, n + 1), 2))


def _gadget_core(rng: random.Random):
    """Star with 4 or 5 leaves; some leaves get a short pendant path.
    Returns the edge list, the next free label and the degree-1 tips."""
    k = rng.choice((4, 4, 5))
    edges = [(0, i) for i in range(1, k + 1)]
    nxt = k + 1
    tips = []
    for leaf in range(1, k + 1):
        end = leaf
        for _ in range(rng.choice((0, 0, 1))):
            edges.append((end, nxt))
            end = nxt
            nxt += 1
        tips.append(end)
    rng.shuffle(tips)
    return edges, nxt, tips


def _attach_pan(edges, nxt, at, length):
    ring = [at] + list(range(nxt, nxt + length - 1))
    edges.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
    return nxt + length - 1


def _attach_bull(edges, nxt, u, v, len_a, len_b):
    for length in (len_a, len_b):
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        chain = [u] + inner + [v]
        edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    return nxt


def pan_gadget(pans: int = 1, seed: int = 0) -> Graph:
    """A high-degree core with ``pans`` pan cycles glued to pendant tips."""
    _require(1 <= pans <= 3, "pan_gadget supports 1..3 pans")
    rng = random.Random(seed)
    edges, nxt, tips = _gadget_core(rng)
    for at in tips[:pans]:
        nxt = _attach_pan(edges, nxt, at, rng.choice((3, 3, 4)))
    if rng.random() < 0.3 and len(tips) >= pans + 2:
        u, v = tips[pans:pans + 2]
        nxt = _attach_bull(edges, nxt, u, v, 1, rng.choice((2, 3)))
    return Graph.from_edges(edges)


def bull_gadget(bulls: int = 1, seed: int = 0) -> Graph:
    """A high-degree core with ``bulls`` bull cycles hung between pairs of
    pendant tips; chain lengths vary so some are triangles and some not."""
    _require(1 <= bulls <= 2, "bull_gadget supports 1..2 bulls")
    rng = random.Random(seed)
    edges, nxt, tips = _gadget_core(rng)
    for b in range(bulls):
        u, v = tips[2 * b], tips[2 * b + 1]
        len_a = rng.choice((1, 1, 2))
        len_b = rng.choice((2, 3)) if len_a == 1 else rng.choice((2, 3))
        nxt = _attach_bull(edges, nxt, u, v, len_a, len_b)
    if rng.random() < 0.3 and len(tips) > 2 * bulls:
        nxt = _attach_pan(edges, nxt, tips[2 * bulls], 3)
    return Graph.from_edges(edges)


def gen(family: str, params: dict | None = None, seed: int = 0) -> Graph:
    """Deterministic graph for ``(family, params, seed)``."""
    params = dict(params or {})
    try:
        if family == "random_gnm":
            return random_gnm(int(params["n"]), int(params["m"]), seed)
        if family == "random_near_subcubic":
            return random_near_subcubic(int(params["n"]), int(params.get("extra", 1)), seed)
        if family == "wheel":
            return wheel(int(params["n"]))
        if family == "star":
            return star(int(params["n"]))
        if family == "complete":
            return complete(int(params["n"]))
        if family == "pan_gadget":
            return pan_gadget(int(params.get("pans", 1)), seed)
        if family == "bull_gadget":
            return bull_gadget(int(params.get("bulls", 1)), seed)
    except KeyError as exc:
        raise ValueError(f"family {family!r} needs parameter {exc.args[0]!r}") from None
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


# exhaustive catalogues


def connected_graphs(nmax: int, max_degree: int | None = None, nmin: int = 1):
    """All connected graphs on 1..n vertices for nmin <= n <= nmax, one per
    isomorphism class, optionally with bounded maximum degree.

    Every connected graph loses a non-cut vertex and stays connected, so
    level n is grown from level n - 1 by adding a vertex joined to every
    nonempty neighbour subset; duplicates are merged with networkx.
    """
    import networkx as nx

    cap = max_degree if max_degree is not None else nmax
    level = [nx.empty_graph(1)]
    if nmin <= 1 <= nmax:
        yield Graph([1])
    for n in range(2, nmax + 1):
        buckets: dict = {}
        nxt = []
        for h in level:
            room = [v for v in h.nodes if h.degree(v) < cap]
            for k in range(1, min(len(room), cap) + 1):
                for nb in combinations(room, k):
                    h2 = h.copy()
                    h2.add_edges_from((n - 1, v) for v in nb)
                    key = nx.weisfeiler_lehman_graph_hash(h2, iterations=3)
                    same = buckets.setdefault(key, [])
                    if any(nx.is_isomorphic(h2, o) for o in same):
                        continue
                    same.append(h2)
                    nxt.append(h2)
        level = nxt
        if n >= nmin:
            for h in level:
                yield Graph(range(1, n + 1), ((u + 1, v + 1) for u, v in h.edges))
