import networkx as nx
import pytest

from crossbound.errors import GraphError
from crossbound.generators import complete, petersen
from crossbound.graph import MultiGraph
from crossbound.graphio import format_edgelist, format_graph6, parse, read_graph


def test_edgelist_comments_and_order():
    g = parse("# a triangle\n\n2 0\n0 1   # first\n1 2\n7\n")
    assert g.endpoints(0) == (0, 2) and g.endpoints(1) == (0, 1)
    assert g.has_vertex(7) and g.degree(7) == 0


def test_edgelist_multigraph_roundtrip():
    g = MultiGraph.from_pairs([(0, 1), (0, 1), (1, 2), (3, 3)], [9])
    assert parse(format_edgelist(g)) == g


@pytest.mark.parametrize("text", ["0 x\n", "-1 2\n", "1 2 3\n"])
def test_edgelist_errors(text):
    with pytest.raises(GraphError):
        parse(text)


def test_graph6_against_networkx():
    for g in (complete(5), petersen()):
        text = format_graph6(g)
        assert text == nx.to_graph6_bytes(g.underlying_simple(), header=False).decode()
        assert parse(text, "graph6") == g
    assert parse(">>graph6<<D~{\n", "graph6") == complete(5)


def test_graph6_errors():
    with pytest.raises(GraphError):
        parse("D~{\nD~{\n", "graph6")
    with pytest.raises(GraphError):
        format_graph6(MultiGraph.from_pairs([(0, 1), (0, 1)]))
    with pytest.raises(GraphError):
        parse("0 1", "adjacency")


def test_read_graph(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("0 1\n1 2\n")
    assert read_graph(p).m == 2
