"""Independent oracles and instance builders shared by the tests.

Nothing here reuses the package's search code: path systems come from
networkx, validity rules are restated from their definitions.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import networkx as nx

from pathnumber.graph import Graph, path_edges
from pathnumber.patterns import Var

# results reported by the acceptance tests, printed in the terminal summary
ACCEPTANCE: dict = {}


def record(num: int, ok: bool, detail: str):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE[num] = line
    print(line)


def graph(edges, vertices=()) -> Graph:
    return Graph.from_edges(edges, vertices)


def cycle(n: int) -> Graph:
    return graph([(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return graph([(i, i + 1) for i in range(1, n)], vertices=range(1, n + 1))


def relabel_random(g: Graph, rng: random.Random) -> Graph:
    new = list(range(100, 100 + g.n))
    rng.shuffle(new)
    return g.relabel(dict(zip(g.vertices, new)))


def random_path_partition(g: Graph, rng: random.Random) -> list[tuple]:
    """A random (not optimal) partition into paths, grown by random walks."""
    unc = set(g.edges())
    paths = []
    while unc:
        e = rng.choice(sorted(unc, key=lambda e: sorted(map(str, e))))
        unc.discard(e)
        p = list(e)
        for _ in range(2):
            while True:
                end = p[-1]
                opts = sorted((w for w in g.neighbors(end)
                               if frozenset((end, w)) in unc and w not in p), key=str)
                if not opts or rng.random() < 0.25:
                    break
                w = rng.choice(opts)
                unc.discard(frozenset((end, w)))
                p.append(w)
            p.reverse()
        paths.append(tuple(p))
    return paths


def covering_subfamily(paths, v4) -> list[tuple]:
    return [p for p in paths if any(e & v4 for e in path_edges(p))]


def is_bull_pair_def(g: Graph, u, v) -> bool:
    """Bull pair straight from the definition."""
    if g.degree(u) != 3 or g.degree(v) != 3 or not g.has_edge(u, v):
        return False
    return any(set(g.neighbors(w)) == {u, v} for w in g.vertices)


# disjoint paths


def exhaustive_disjoint_paths(h: Graph, pairs) -> bool:
    """Try every combination of simple paths, one per pair."""
    nxg = h.to_networkx()
    options = []
    for s, t in pairs:
        if s == t:
            options.append([[s]])
            continue
        options.append([list(p) for p in nx.all_simple_paths(nxg, s, t)])
    for combo in product(*options):
        interiors = [set(p[1:-1]) for p in combo]
        ok = True
        for i, j in permutations(range(len(combo)), 2):
            if set(combo[i]) & interiors[j]:
                ok = False
                break
        if ok:
            return True
    return False


# naive pattern enumeration for ell = 0


def _is_v4_pair(a, b, v4):
    return a in v4 or b in v4


def naive_patterns_ell0(g: Graph, v4) -> set:
    """All patterns without variables, by listing every trace over N[V4] and
    filtering every set of traces against the five conditions.

    Patterns are returned as frozensets of unoriented traces.
    """
    v4 = frozenset(v4)
    closed = set(v4)
    for v in v4:
        closed |= g.neighbors(v)
    symbols = sorted(closed, key=str)
    traces = []
    seen = set()
    for r in range(2, len(symbols) + 1):
        for seq in permutations(symbols, r):
            if not any(s in v4 for s in seq):
                continue
            if any(_is_v4_pair(a, b, v4) and not g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                continue
            key = frozenset((seq, seq[::-1]))
            if key in seen:
                continue
            seen.add(key)
            traces.append(seq)
    target = {e for e in g.edges() if e & v4}

    def edges_of(t):
        return {frozenset(p) for p in zip(t, t[1:]) if _is_v4_pair(*p, v4)}

    def ends_of(t):
        return {frozenset(p) for p in zip(t, t[1:]) if not _is_v4_pair(*p, v4)}

    useful = [t for t in traces if edges_of(t) <= target]
    by_edge: dict = {}
    for t in useful:
        for e in edges_of(t):
            by_edge.setdefault(e, []).append(t)
    order = sorted(target, key=lambda e: sorted(map(str, e)))
    found = set()

    def ok(chosen):
        ends_seen = set()
        for t in chosen:
            en = ends_of(t)
            if en & ends_seen:
                return False
            ends_seen |= en
        load: dict = {}
        for t in chosen:
            for i, s in enumerate(t):
                load[s] = load.get(s, 0) + (1 if i in (0, len(t) - 1) else 2)
        return all(k <= g.degree(s) for s, k in load.items() if s not in v4)

    def rec(covered, chosen):
        # both checks are monotone in the chosen set, so prune early
        if not ok(chosen):
            return
        rest = [e for e in order if e not in covered]
        if not rest:
            found.add(frozenset(frozenset((t, t[::-1])) for t in chosen))
            return
        e = rest[0]
        for t in by_edge.get(e, []):
            es = edges_of(t)
            if es & covered:
                continue
            rec(covered | es, chosen + [t])

    rec(frozenset(), [])
    return found


def as_unoriented(p) -> frozenset:
    return frozenset(frozenset((t, t[::-1])) for t in p.traces)


def variable_blind_form(p) -> tuple:
    """Canonical form computed by brute force over variable renamings."""
    xs = sorted({s for t in p.traces for s in t if isinstance(s, Var)})
    best = None
    for perm in permutations(range(1, len(xs) + 1)):
        ren = {x: Var(i) for x, i in zip(xs, perm)}
        traces = frozenset(frozenset((tuple(ren.get(s, s) for s in t),
                                      tuple(ren.get(s, s) for s in t)[::-1]))
                           for t in p.traces)
        d = tuple(sorted((ren[x].i, p.degree_of(x)) for x in xs))
        key = (traces, d)
        cand = repr(sorted(map(repr, traces))) + repr(d)
        if best is None or cand < best[0]:
            best = (cand, key)
    return best[1]


def high_of(g: Graph) -> int:
    return sum(g.degree(v) for v in g.vertices if g.degree(v) >= 4)


def sen_combinatorial_check(g: Graph, k: int) -> bool:
    """Whether deleting some k edges makes g subcubic (definition check)."""
    for s in combinations(g.edges(), k):
        if g.without_edges(s).max_degree() <= 3:
            return True
    return False
