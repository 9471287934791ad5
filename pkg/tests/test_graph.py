import math

import pytest

from cdg.errors import (
    EmptyVertexSetError,
    GraphFormatError,
    MissingEdgeError,
    SelfLoopError,
    VertexCountError,
    VertexRangeError,
)
from cdg.fixtures import LEWIS_FIVE_VERTEX, fixture
from cdg.canonical import is_isomorphic
from cdg.graph import (
    INFINITE,
    complement,
    complete_graph,
    connected_components,
    degree,
    delete_edges,
    delete_vertex,
    diameter,
    empty_graph,
    format_cdg1,
    graph_from_edge_list,
    induced_subgraph,
    is_connected,
    parse_cdg1,
    parse_dot,
    path_graph,
    to_dot,
)
from cdg.rules import palfy_violation, replay, RuleWitness


def test_figure1_edge_list():
    g = graph_from_edge_list(6, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)])
    assert g.num_edges == 10
    assert g == fixture("FIG1")


def test_single_vertex_and_duplicates():
    g = graph_from_edge_list(1, [])
    assert g.n == 1 and g.num_edges == 0
    assert graph_from_edge_list(3, [(1, 2), (1, 2)]).num_edges == 1
    assert graph_from_edge_list(3, [(2, 1)]).has_edge(1, 2)


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (0, [], VertexCountError),
        (9, [], VertexCountError),
        (3, [(1, 4)], VertexRangeError),
        (3, [(0, 1)], VertexRangeError),
        (3, [(2, 2)], SelfLoopError),
    ],
)
def test_validation_errors_are_distinct(n, edges, exc):
    with pytest.raises(exc):
        graph_from_edge_list(n, edges)


def test_complement_examples():
    assert complement(complete_graph(6)) == empty_graph(6)
    g = fixture("FIG6")
    assert complement(complement(g)) == g
    h = complement(fixture("FIG5_III"))
    assert h.edges == {(1, 3), (1, 5), (1, 6), (2, 4), (2, 6), (4, 5)}


def test_diameter_examples():
    assert diameter(fixture("FIG1")) == 3
    assert diameter(complete_graph(6)) == 1
    assert diameter(fixture("FIG2")) == INFINITE
    assert math.isinf(INFINITE)


def test_components():
    assert connected_components(fixture("FIG2")) == [frozenset({1, 2, 3}), frozenset({4, 5, 6})]
    assert connected_components(complete_graph(6)) == [frozenset(range(1, 7))]
    assert [len(c) for c in connected_components(fixture("FIG3A"))] == [1, 5]
    # ordered by size, then by smallest member
    g = graph_from_edge_list(5, [(1, 2), (1, 3)])
    assert connected_components(g) == [frozenset({4}), frozenset({5}), frozenset({1, 2, 3})]


def test_induced_subgraph():
    g = fixture("FIG6")
    h = induced_subgraph(g, [1, 2, 3, 4, 6])
    # p6 becomes label 5 after order-preserving relabelling
    assert h.edges == {(1, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)}
    assert h == LEWIS_FIVE_VERTEX
    assert delete_vertex(complete_graph(6), 4) == complete_graph(5)
    assert induced_subgraph(path_graph(3), [1, 3]) == empty_graph(2)
    with pytest.raises(EmptyVertexSetError):
        induced_subgraph(g, [])


def test_delete_edges():
    g = fixture("FIG6")
    assert is_isomorphic(delete_edges(g, [(1, 4)]), fixture("FIG5_I"))
    h = delete_edges(complete_graph(3), [(1, 2)])
    assert h.edges == {(1, 3), (2, 3)}
    with pytest.raises(MissingEdgeError):
        delete_edges(g, [(1, 5)])
    cut = delete_edges(g, [(1, 2)])
    assert replay(cut, RuleWitness("palfy", "triple", (1, 2, 6)))
    assert palfy_violation(cut) is not None


def test_degree():
    assert [degree(fixture("FIG5_VI"), v) for v in range(1, 7)] == [3] * 6
    assert degree(complete_graph(6), 3) == 5
    assert degree(fixture("FIG5_I"), 1) == 2
    with pytest.raises(VertexRangeError):
        degree(complete_graph(3), 4)


def test_cdg1_round_trip():
    g = fixture("FIG1")
    text = format_cdg1(g)
    assert text == "n=6\nedges=1-2,1-3,1-4,2-3,2-4,2-5,3-4,3-5,4-5,5-6"
    assert parse_cdg1(text) == g
    assert parse_cdg1(format_cdg1(g, single_line=True)) == g
    assert parse_cdg1("# comment\nn=2\nedges=\n") == empty_graph(2)


@pytest.mark.parametrize("text", ["", "n=3", "n=x;edges=", "n=3;edges=1+2", "m=3;edges=1-2"])
def test_cdg1_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_cdg1(text)


def test_dot_round_trip():
    for name in ("FIG1", "FIG2", "FIG5_IV"):
        g = fixture(name)
        dot = to_dot(g, "G")
        assert dot.startswith("graph G {")
        assert parse_dot(dot) == g
    assert parse_dot(to_dot(empty_graph(3))) == empty_graph(3)


def test_diameter_infinite_iff_disconnected():
    for g in (fixture("FIG2"), fixture("FIG3B"), complete_graph(4), empty_graph(1)):
        assert (diameter(g) == INFINITE) == (not is_connected(g))
