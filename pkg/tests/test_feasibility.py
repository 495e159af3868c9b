import random

import pytest

from helpers import (covering_subfamily, cycle, exhaustive_disjoint_paths, graph,
                     random_path_partition)
from pathnumber.feasibility import check_feasible, disjoint_paths, realize_family
from pathnumber.graph import GraphError, components, odd_count, path_edges
from pathnumber.oracle import brute_pn, random_gnm, random_near_subcubic
from pathnumber.patterns import (Pattern, Var, encode, is_covering_family, objective,
                                 odd_number, pattern_valid, v4_edges)
from pathnumber.structures import bull_pairs, high_degree_set, is_bull_pair

STAR = [("v", "a"), ("v", "b"), ("v", "c"), ("v", "d")]
V = frozenset({"v"})


def pat(*traces, d=()):
    return Pattern(tuple(tuple(t) for t in traces), tuple(d))


def internally_disjoint(paths):
    for i, p in enumerate(paths):
        for j, r in enumerate(paths):
            if i != j and set(p) & set(r[1:-1]):
                return False
    return True


def test_c6_single_pair():
    (p,) = disjoint_paths(cycle(6), [(1, 4)])
    assert p[0] == 1 and p[-1] == 4 and len(p) == 4


def test_c6_crossing_pairs_infeasible():
    assert exhaustive_disjoint_paths(cycle(6), [(1, 4), (2, 5)]) is False
    assert disjoint_paths(cycle(6), [(1, 4), (2, 5)]) is None


def test_adjacent_pair_uses_edge():
    g = random_gnm(7, 12, 3)
    u, v = tuple(g.edges()[0])
    (p,) = disjoint_paths(g, [(u, v)])
    assert set(p) == {u, v}


def test_shared_endpoints_allowed():
    # two pairs meeting at 1 on a star-like graph
    g = graph([(1, 2), (1, 3)])
    assert disjoint_paths(g, [(1, 2), (1, 3)]) == [(1, 2), (1, 3)]


def test_unknown_terminal():
    with pytest.raises(GraphError):
        disjoint_paths(cycle(4), [(1, 9)])


def test_repeated_pair_guarded():
    with pytest.raises(GraphError):
        disjoint_paths(cycle(4), [(1, 3), (3, 1)])


def test_forbidden_vertices_not_internal():
    g = cycle(6)
    assert disjoint_paths(g, [(1, 3)], forbidden={2}) == [(1, 6, 5, 4, 3)]
    assert disjoint_paths(g, [(1, 3)], forbidden={2, 5}) is None


def test_random_agreement():
    rng = random.Random(5)
    for seed in range(150):
        n = rng.randint(3, 7)
        g = random_gnm(n, rng.randint(n - 1, min(n * (n - 1) // 2, 2 * n)), seed)
        verts = list(g.vertices)
        k = rng.randint(1, 3)
        pairs, seen = [], set()
        while len(pairs) < k:
            s, t = rng.sample(verts, 2)
            if frozenset((s, t)) not in seen:
                seen.add(frozenset((s, t)))
                pairs.append((s, t))
        got = disjoint_paths(g, pairs)
        assert (got is not None) == exhaustive_disjoint_paths(g, pairs), seed
        if got is not None:
            assert internally_disjoint(got)
            for (s, t), p in zip(pairs, got):
                assert {p[0], p[-1]} == {s, t}
                assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def test_star_pairing_feasible():
    g = graph(STAR)
    w = check_feasible(g, V, pat("avb", "cvd"))
    assert w is not None and w.connecting_paths == {}
    fam = realize_family(g, V, pat("avb", "cvd"), w)
    assert fam == [("a", "v", "b"), ("c", "v", "d")]


def star_with_bull():
    return graph(STAR + [("a", "b"), ("a", "w"), ("b", "w")])


def test_bull_pair_endpoints_rejected():
    g = star_with_bull()
    assert is_bull_pair(g, "a", "b")
    bad, good = pat("avb", "cvd"), pat("avc", "bvd")
    assert pattern_valid(g, V, bad) and pattern_valid(g, V, good)
    assert check_feasible(g, V, bad) is None
    assert check_feasible(g, V, good) is not None
    assert objective(g, V, good, odd_count(g)) == brute_pn(g) == 2


def test_degree_three_variable_unavailable():
    g = graph(STAR + [("a", "z")])
    p = pat((Var(1), "a", "v", "b"), "cvd", d=(3,))
    assert pattern_valid(g, V, p)
    assert check_feasible(g, V, p) is None


def test_invalid_pattern_rejected():
    with pytest.raises(GraphError):
        check_feasible(graph(STAR), V, pat("avb"))


def test_pendant_realized():
    g = graph(STAR + [("a", "z")])
    p = pat((Var(1), "a", "v", "b"), "cvd", d=(1,))
    w = check_feasible(g, V, p)
    assert w.assignment == {Var(1): "z"}
    fam = realize_family(g, V, p, w)
    assert fam == [("z", "a", "v", "b"), ("c", "v", "d")]


def test_connecting_path_through_outside():
    # a and c are joined through the outside vertices y, z
    g = graph(STAR + [("a", "y"), ("y", "z"), ("z", "c")])
    p = pat("bvac", "dvc")
    assert pattern_valid(g, V, p)
    w = check_feasible(g, V, p)
    assert tuple(sorted(w.connecting_paths[frozenset("ac")])) == ("a", "c", "y", "z")
    assert realize_family(g, V, p, w) == [("b", "v", "a", "y", "z", "c"), ("d", "v", "c")]


def _bull_free_families(count, seed0):
    rng = random.Random(seed0)
    seed = seed0 * 1000
    while count:
        seed += 1
        g = random_near_subcubic(rng.randint(6, 9), rng.randint(1, 2), seed)
        for c in components(g):
            v4 = high_degree_set(c)
            if not v4:
                continue
            q = covering_subfamily(random_path_partition(c, rng), v4)
            bulls = bull_pairs(c)
            if any(frozenset((p[0], p[-1])) in bulls for p in q):
                continue
            yield c, v4, q
            count -= 1
            break


def test_round_trip():
    n = 0
    for g, v4, q in _bull_free_families(200, 1):
        p = encode(g, v4, q)
        w = check_feasible(g, v4, p)
        assert w is not None
        fam = realize_family(g, v4, p, w)
        assert is_covering_family(g, v4, fam) and len(fam) == len(q)
        covered = {e for path in fam for e in path_edges(path)}
        assert v4_edges(g, v4) <= covered
        assert not any(frozenset((r[0], r[-1])) in bull_pairs(g) for r in fam)
        assert internally_disjoint(list(w.connecting_paths.values()))
        assert odd_number(g, v4, encode(g, v4, fam)) == odd_number(g, v4, p)
        n += 1
    assert n == 200
