import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import cycle, graph, path_graph
from pathnumber.graph import (Graph, GraphError, ParseError, components, degree, format_graph,
                              is_connected, odd_count, parse_graph, path_edges, remove_paths,
                              strip_isolated, verify_partition, vkey)
from pathnumber.oracle import complete, random_gnm, star, wheel


def test_parse_path():
    g = parse_graph(b"p edge 3 2\ne 1 2\ne 2 3")
    assert g.vertices == ("1", "2", "3")
    assert g.edge_set() == {frozenset(("1", "2")), frozenset(("2", "3"))}


def test_parse_single_vertex():
    g = parse_graph("p edge 1 0\n")
    assert g.n == 1 and g.m == 0


def test_parse_self_loop():
    with pytest.raises(ParseError) as exc:
        parse_graph("e 1 1")
    assert exc.value.lineno == 1


@pytest.mark.parametrize("text,line", [
    ("c hi\ne 1 2\ne 2 1\n", 3),
    ("e 1 2\nx 3\n", 2),
    ("p edge two 1\n", 1),
    ("e 1\n", 1),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.lineno == line
    assert f"line {line}" in str(exc.value)


def test_parse_header_mismatch():
    with pytest.raises(ParseError):
        parse_graph("p edge 3 5\ne 1 2\n")


def test_parse_comments_and_isolated():
    g = parse_graph("c a comment\nn z\ne b a\n")
    assert g.vertices == ("z", "b", "a")
    assert g.degree("z") == 0


def test_format_round_trip():
    g = graph([("a", "b"), ("b", "c")], vertices=["a", "b", "c", "q"])
    h = parse_graph(format_graph(g, comment="x"))
    assert h == g and h.vertices == g.vertices


def test_natural_token_order():
    assert sorted(["10", "2", "b", "1"], key=vkey) == ["1", "2", "10", "b"]


def test_degree_examples():
    assert degree(complete(4), 1) == 3
    assert degree(Graph(["v"]), "v") == 0
    assert degree(star(4), 0) == 4
    with pytest.raises(GraphError):
        degree(star(4), 99)


def test_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(GraphError):
        Graph([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(GraphError):
        Graph([1], [(1, 2)])


def test_components_examples():
    g = graph([(1, 2), (2, 3), (4, 5), (5, 6), (6, 4)])
    comps = components(g)
    assert [sorted(c.vertices) for c in comps] == [[1, 2, 3], [4, 5, 6]]
    assert len(components(cycle(5))) == 1
    assert components(Graph()) == []


def test_remove_paths_examples():
    c4 = cycle(4)
    rest = remove_paths(c4, [(1, 2, 3, 4)])
    assert rest.edge_set() == {frozenset((4, 1))}
    assert remove_paths(c4, []) == c4
    w4 = graph([("h", x) for x in "abcd"] + [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    rest = remove_paths(w4, [("a", "h", "b"), ("c", "h", "d")])
    expected = w4.edge_set() - set(path_edges(("a", "h", "b"))) - set(path_edges(("c", "h", "d")))
    assert rest.edge_set() == expected
    assert rest.n == 5 and rest.degree("h") == 0
    assert all(rest.degree(x) == 2 for x in "abcd")


def test_remove_paths_errors():
    with pytest.raises(GraphError):
        remove_paths(cycle(4), [(1, 3)])
    with pytest.raises(GraphError):
        remove_paths(cycle(4), [(1, 2), (2, 1)])


def test_odd_count_examples():
    assert odd_count(path_graph(3)) == 2
    assert odd_count(complete(4)) == 4
    assert odd_count(cycle(4)) == 0


def test_verify_partition():
    w = wheel(5)
    assert verify_partition(w, [(2, 3, 0, 1, 4), (1, 2, 0, 4, 3)])
    assert not verify_partition(w, [(2, 3, 0, 1, 4), (1, 2, 0, 4, 3), (1, 2)])
    assert not verify_partition(w, [(2, 3, 0, 1, 4), (1, 2, 0, 4)])
    assert not verify_partition(w, [(1, 2, 1)])


def test_strip_isolated():
    g = graph([(1, 2)], vertices=[1, 2, 3])
    assert strip_isolated(g).vertices == (1, 2)


@st.composite
def graphs(draw, nmax=9):
    n = draw(st.integers(1, nmax))
    m = draw(st.integers(0, n * (n - 1) // 2))
    return random_gnm(n, m, draw(st.integers(0, 2**32)))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_handshake_parity(g):
    assert odd_count(g) % 2 == 0


@settings(max_examples=150, deadline=None)
@given(graphs(), st.integers(0, 2**32))
def test_remove_then_readd(g, seed):
    rng = random.Random(seed)
    edges = [tuple(e) for e in g.edges()]
    chosen = rng.sample(edges, rng.randint(0, len(edges)))
    rest = remove_paths(g, [e for e in chosen])
    assert rest.vertices == g.vertices
    assert rest.with_edges(chosen) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_components_partition(g):
    comps = components(g)
    verts = [v for c in comps for v in c.vertices]
    assert sorted(verts, key=vkey) == sorted(g.vertices, key=vkey)
    assert sum(c.m for c in comps) == g.m
    assert all(is_connected(c) for c in comps)
