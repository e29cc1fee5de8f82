import pytest
from hypothesis import given

from flamekit import (CycleError, Edge, GraphFormatError, RootedDigraph, delta_in, delta_in_set,
                      parse_digraph, parse_edge_set, serialize_digraph, serialize_edge_set,
                      topological_order)
from flamekit.errors import UnknownVertexError

from conftest import digraphs


def test_parse_single_edge():
    D = parse_digraph("root r\nedge e1 r v\n")
    assert D.root == "r"
    assert D.vertices == ("r", "v")
    assert D.edges == (Edge("e1", "r", "v"),)


def test_parse_g1(G1):
    assert set(G1.vertices) == {"r", "a", "b"}
    assert G1.edge("e3") == Edge("e3", "a", "b")
    assert [e.id for e in G1.in_edges("a")] == ["e1", "e2"]


@pytest.mark.parametrize("text, lineno", [
    ("root r\nedge e1 v r\n", 2),
    ("root r\nedge e1 v v\n", 2),
    ("root r\nedge e1 r v\nedge e1 r w\n", 3),
    ("root r\nfoo bar\n", 2),
    ("root r\nedge e1 r\n", 2),
    ("root r\nroot s\n", 2),
])
def test_parse_errors_report_line(text, lineno):
    with pytest.raises(GraphFormatError) as info:
        parse_digraph(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_parse_requires_root():
    with pytest.raises(GraphFormatError, match="root"):
        parse_digraph("edge e1 r v\n")


def test_comments_and_isolated_vertices():
    D = parse_digraph("# header\nroot r  # the root\nvertex u\n\nedge e1 r v\n")
    assert D.vertices == ("r", "u", "v")
    assert "vertex u" in serialize_digraph(D)


def test_from_edges_validates():
    with pytest.raises(GraphFormatError):
        RootedDigraph.from_edges("r", [("e1", "a", "r")])
    with pytest.raises(GraphFormatError):
        RootedDigraph.from_edges("r", [("e1", "r", "a"), ("e1", "r", "b")])


def test_topological_order(G1, C1):
    assert topological_order(G1) == ["r", "a", "b"]
    assert topological_order(RootedDigraph.from_edges("r", [])) == ["r"]
    with pytest.raises(CycleError) as info:
        topological_order(C1)
    assert info.value.cycle == ["e2", "e3"]


def test_topological_order_puts_root_first_despite_ids():
    D = RootedDigraph.from_edges("z", [("e1", "z", "a")], ["b"])
    assert topological_order(D) == ["z", "a", "b"]


def test_delta_in(G1):
    assert delta_in(G1, "a") == {"e1", "e2"}
    assert delta_in(G1, "r") == set()
    assert delta_in_set(G1, {"b"}) == {"e3", "e4"}
    assert delta_in_set(G1, {"a", "b"}) == {"e1", "e2", "e4"}
    with pytest.raises(UnknownVertexError):
        delta_in(G1, "zz")


def test_edge_set_format(G1):
    assert serialize_edge_set({"e4", "e1"}) == "e1\ne4\n"
    assert parse_edge_set("e1\n# note\ne4\n", G1) == {"e1", "e4"}
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_edge_set("e9\n", G1)


@given(digraphs())
def test_round_trip(D):
    assert parse_digraph(serialize_digraph(D)) == D


@given(digraphs())
def test_delta_in_set_has_no_internal_edges(D):
    X = set(D.nonroot[::2])
    for eid in delta_in_set(D, X):
        assert D.tail(eid) not in X and D.head(eid) in X


@given(digraphs(acyclic=True))
def test_topological_order_is_valid(D):
    order = topological_order(D)
    rank = {v: i for i, v in enumerate(order)}
    assert sorted(order) == sorted(D.vertices) and order[0] == D.root
    assert all(rank[e.tail] < rank[e.head] for e in D.edges)


@given(digraphs())
def test_cycle_certificate_is_a_cycle(D):
    try:
        topological_order(D)
    except CycleError as exc:
        edges = [D.edge(e) for e in exc.cycle]
        assert all(a.head == b.tail for a, b in zip(edges, edges[1:] + edges[:1]))
