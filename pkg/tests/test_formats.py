import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from equimatch.formats import (FormatError, detect_format, parse_edgelist, parse_graph6, read_graphs, to_dot,
                               to_edgelist, to_graph6)
from equimatch.graph import Graph, cycle_graph


def nx_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


@pytest.mark.parametrize("text, n, edges", [
    ("?", 0, []),
    ("@", 1, []),
    ("A?", 2, []),
    ("A_", 2, [(0, 1)]),
    ("Dhc", 5, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]),
])
def test_known_strings(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n and list(g.edges()) == edges
    assert to_graph6(g) == text


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_graph6_agrees_with_networkx(g):
    assert to_graph6(g) == nx_graph6(g)
    assert parse_graph6(to_graph6(g)) == g


def test_long_length_prefix():
    g = Graph.from_edges(70, [(0, 69), (3, 4)])
    text = to_graph6(g)
    assert text[0] == "~"
    assert text == nx_graph6(g)
    assert list(parse_graph6(text).edges()) == [(0, 69), (3, 4)]


def test_header_and_whitespace_are_accepted():
    assert parse_graph6(">>graph6<<A_\n") == parse_graph6("A_")
    assert parse_graph6("  Dhc  ") == cycle_graph(5)


@pytest.mark.parametrize("text, offset", [
    ("A_x", 2),
    ("D hc", 1),
    ("Dh", 2),
    ("A`", 1),
])
def test_malformed_graph6_reports_offset(text, offset):
    with pytest.raises(FormatError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_non_ascii_rejected():
    with pytest.raises(FormatError):
        parse_graph6("Dhé")


def test_edgelist_round_trip_and_errors():
    g = cycle_graph(4)
    assert parse_edgelist(to_edgelist(g)) == g
    assert parse_edgelist("3 1  # header\n0 2\n").m == 1
    for bad in ("", "3 2\n0 1\n", "3 1\n0 3\n", "3 2\n0 1\n1 0\n", "x y\n", "2 1\n0 a\n"):
        with pytest.raises(FormatError):
            parse_edgelist(bad)


def test_detect_and_read():
    assert detect_format("5 5\n0 1\n") == "edgelist"
    assert detect_format("Dhc\n") == "graph6"
    assert [g.n for g in read_graphs("Dhc\n\nA_\n")] == [5, 2]
    assert next(read_graphs("2 1\n0 1\n")).m == 1


def test_dot_output():
    dot = to_dot(Graph.from_edges(3, [(0, 2)]))
    assert dot.startswith("graph G {")
    assert "  0 -- 2;" in dot and "  1;" in dot
