import pytest

from helpers import graph
from pathnumber.graph import GraphError, components, is_connected, verify_partition
from pathnumber.nice import (BullShortening, PanRemoval, log_from_json, log_to_json,
                             make_nice, replay_witness)
from pathnumber.oracle import (brute_partition, brute_pn, bull_gadget, complete, pan_gadget,
                               random_near_subcubic, wheel)
from pathnumber.structures import analyze, high


STAR = [("v", "a"), ("v", "b"), ("v", "c"), ("v", "d")]


def star_with_pan():
    return graph(STAR + [("a", "x"), ("x", "y"), ("y", "a")])


def star_with_long_bull():
    # 4-cycle a, x, y, b closed by the edge a-b
    return graph(STAR + [("a", "x"), ("x", "y"), ("y", "b"), ("a", "b")])


def assert_nice(res, g):
    h = res.nice_graph
    rep = analyze(h)
    assert is_connected(h) and h.max_degree() >= 4
    assert rep.pan_cycles == []
    assert all(len(c) == 3 for c in rep.bull_cycles)
    assert high(h) == high(g)


def test_pan_removed():
    g = star_with_pan()
    res = make_nice(g)
    assert res.pan_offset == 1
    assert res.nice_graph.edge_set() == graph(STAR).edge_set()
    assert brute_pn(g) == brute_pn(res.nice_graph) + 1
    assert [type(s) for s in res.replay_log] == [PanRemoval]
    assert_nice(res, g)


def test_bull_shortened():
    g = star_with_long_bull()
    res = make_nice(g)
    assert res.pan_offset == 0
    h = res.nice_graph
    assert set(h.vertices) == {"v", "a", "b", "c", "d", "x"}
    assert h.has_edge("a", "b") and h.has_edge("a", "x") and h.has_edge("b", "x")
    assert brute_pn(g) == brute_pn(h)
    (step,) = res.replay_log
    assert isinstance(step, BullShortening) and step.w == "x"
    assert_nice(res, g)


def test_wheel_is_fixpoint():
    g = wheel(5)
    res = make_nice(g)
    assert res.nice_graph == g and res.pan_offset == 0 and res.replay_log == []


def test_rejects_bad_input():
    with pytest.raises(GraphError):
        make_nice(complete(4))
    with pytest.raises(GraphError):
        make_nice(graph(STAR + [(1, 2)]))


def test_replay_identity():
    g = wheel(5)
    part = brute_partition(g)
    assert replay_witness(part, []) == [tuple(p) for p in part]


@pytest.mark.parametrize("build,extra", [(star_with_pan, 1), (star_with_long_bull, 0)])
def test_replay_examples(build, extra):
    g = build()
    res = make_nice(g)
    part = brute_partition(res.nice_graph)
    out = replay_witness(part, res.replay_log)
    assert len(out) == len(part) + extra
    assert verify_partition(g, out)


def test_replay_needs_a_path_ending_at_attachment():
    g = star_with_pan()
    res = make_nice(g)
    out = replay_witness([("b", "v", "c"), ("d", "v", "a")], res.replay_log)
    assert verify_partition(g, out) and len(out) == 3
    with pytest.raises(GraphError):
        replay_witness([("b", "v", "c"), ("d", "v")], res.replay_log)


def test_log_json_round_trip():
    for seed in range(20):
        g = bull_gadget(2, seed) if seed % 2 else pan_gadget(2, seed)
        res = make_nice(g)
        assert log_from_json(log_to_json(res.replay_log)) == res.replay_log


def test_gadgets_conserve_pn():
    for seed in range(30):
        g = pan_gadget(1 + seed % 2, seed) if seed % 3 else bull_gadget(1, seed)
        if g.m > 20:
            continue
        res = make_nice(g)
        assert_nice(res, g)
        assert brute_pn(g) == brute_pn(res.nice_graph) + res.pan_offset
        out = replay_witness(brute_partition(res.nice_graph), res.replay_log)
        assert verify_partition(g, out) and len(out) == brute_pn(g)


def test_random_non_subcubic():
    done = 0
    for seed in range(200):
        g = random_near_subcubic(9, 2, seed)
        for c in components(g):
            if c.max_degree() < 4 or c.m > 18:
                continue
            res = make_nice(c)
            assert_nice(res, c)
            assert brute_pn(c) == brute_pn(res.nice_graph) + res.pan_offset
            done += 1
    assert done > 50
