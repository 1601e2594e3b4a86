import pytest
from hypothesis import given, strategies as st

from graphtrials.errors import GraphParseError
from graphtrials.graph import (
    Graph,
    bfs_tree,
    connected_components,
    graph_distances,
    is_connected,
    normalize_edge,
    parse_graph,
    serialize_graph,
)

from conftest import cycle_graph, path_graph, random_graph


def test_from_edges_normalizes():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.edges == frozenset({(0, 2), (1, 2)})
    assert g.has_edge(2, 0) and g.has_edge(0, 2)
    assert g.m == 2


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])
    with pytest.raises(ValueError):
        Graph(-1, frozenset())


def test_adjacency_sorted():
    g = Graph.from_edges(4, [(0, 3), (0, 1), (0, 2)])
    assert g.neighbors(0) == (1, 2, 3)
    assert g.degree(0) == 3
    assert g.degree(1) == 1


def test_parse_basic():
    g = parse_graph("3 2\n0 1\n1 2\n")
    assert g.n == 3
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_parse_comments_and_blank_lines():
    g = parse_graph("# a triangle\n3 3\n\n0 1\n1 2\n# middle\n0 2\n")
    assert g.m == 3


def test_parse_errors():
    for text in ("", "x y\n", "2 1\n0 1\n0 1\n", "2 2\n0 1\n", "2 1\n0 9\n"):
        with pytest.raises(GraphParseError):
            parse_graph(text)


def test_serialize_roundtrip_fixed():
    g = Graph.from_edges(4, [(0, 1), (2, 3), (1, 2)])
    assert parse_graph(serialize_graph(g)) == g


@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_serialize_roundtrip_random(n, seed):
    import random

    g = random_graph(random.Random(seed), n, 0.4)
    assert parse_graph(serialize_graph(g)) == g


def test_bfs_tree_c4():
    parent, depth = bfs_tree(cycle_graph(4), 0)
    assert parent == {1: 0, 3: 0, 2: 1}
    assert depth == {0: 0, 1: 1, 3: 1, 2: 2}


def test_bfs_tree_partial_cover():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    _, depth = bfs_tree(g, 0)
    assert set(depth) == {0, 1}


def test_connected_components():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
    comps = connected_components(g)
    assert sorted(map(sorted, comps)) == [[0, 1, 2], [3, 4], [5]]
    assert not is_connected(g)
    assert is_connected(cycle_graph(5))
    assert is_connected(Graph.from_edges(1, []))


def test_graph_distances():
    d = graph_distances(cycle_graph(6), 0)
    assert d == {0: 0, 1: 1, 5: 1, 2: 2, 4: 2, 3: 3}
    d = graph_distances(path_graph(3), 0)
    assert d[2] == 2


def test_normalize_edge():
    assert normalize_edge(5, 2) == (2, 5)
    assert normalize_edge(2, 5) == (2, 5)
