from fractions import Fraction

import pytest
from hypothesis import given

from graphshare import ParseError, format_graph, load_graph, parse_graph, save_graph

from .conftest import connected_graphs, path_graph


def test_round_trip():
    g = path_graph([Fraction(1, 3), 0, 5])
    again = parse_graph(format_graph(g))
    assert again.weights == g.weights
    assert set(again.edges) == set(g.edges)


def test_comments_and_blank_lines():
    text = "# a path\n\ngraph 2 1\nv 0 1/2\nv 1 0\n\ne 0 1\n"
    g = parse_graph(text)
    assert g.n == 2
    assert g.weights[0] == Fraction(1, 2)


def test_missing_vertex_rejected():
    with pytest.raises(ParseError):
        parse_graph("graph 2 1\nv 0 1\ne 0 1\n")


def test_bad_edge_endpoint_rejected():
    with pytest.raises(ParseError):
        parse_graph("graph 1 1\nv 0 1\ne 0 5\n")


def test_garbage_line_rejected():
    with pytest.raises(ParseError):
        parse_graph("graph 1 0\nv 0 1\nzzz\n")


def test_negative_weight_rejected():
    with pytest.raises(ParseError):
        parse_graph("graph 1 0\nv 0 -1\n")


def test_file_round_trip(tmp_path):
    g = path_graph([2, 0, 7])
    path = tmp_path / "g.graph"
    save_graph(path, g)
    assert load_graph(path).weights == g.weights


@given(connected_graphs())
def test_format_parse_identity(g):
    again = parse_graph(format_graph(g))
    assert again.n == g.n
    assert again.weights == g.weights
    assert set(again.edges) == set(g.edges)
