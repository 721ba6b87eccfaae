import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import nx_distances, random_connected_graph
from threshdim.families import complete, cycle, l3n, star, t_k
from threshdim.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    GraphFormatError,
    UNREACHABLE,
    add_edges,
    complement_edges,
    diameter,
    k_neighbourhood,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, c in zip(pairs, chosen) if c))


def test_edge_list_examples():
    assert parse_edge_list("2 1\n0 1") == Graph(2, frozenset({(0, 1)}))
    assert parse_edge_list("4 3\n0 1\n1 2\n2 3").sorted_edges == ((0, 1), (1, 2), (2, 3))
    G = parse_edge_list("6 8\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n2 4\n3 5")
    assert G.n == 6 and G.m == 8 and G.has_edge(4, 2) and G.has_edge(3, 5)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 1",
        "3 2\n0 1",
        "3 1\n0 3",
        "3 1\n1 1",
        "3 2\n0 1\n1 0",
        "3 1\n0 x",
        "3 1\n0 1 2",
    ],
)
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_edge_list_round_trip():
    G = l3n(3)
    assert parse_edge_list(write_edge_list(G)) == G


def test_graph6_known_strings():
    assert parse_graph6("A_") == Graph(2, frozenset({(0, 1)}))
    assert write_graph6(Graph(2, frozenset({(0, 1)}))) == "A_"
    assert parse_graph6(write_graph6(complete(4))) == complete(4)
    L = parse_graph6(write_graph6(l3n(3)))
    assert L.n == 9 and L.m == 8


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_graph6_round_trip_and_networkx_agreement(G):
    s = write_graph6(G)
    assert parse_graph6(s) == G
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    assert s == nx.to_graph6_bytes(H, header=False).decode().strip()


def test_graph6_large_sizes_round_trip():
    rng = random.Random(3)
    for n in (62, 63, 100):
        G = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.05))
        s = write_graph6(G)
        assert parse_graph6(s) == G
        assert parse_graph6(">>graph6<<" + s) == G


@pytest.mark.parametrize("bad", ["A", "A_?", "A\x01", "~?"])
def test_graph6_errors(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_add_edges_value_semantics():
    P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert add_edges(P3, []) == P3
    C3 = add_edges(P3, [(0, 2)])
    assert C3.m == 3 and P3.m == 2
    with pytest.raises(GraphError):
        add_edges(P3, [(0, 1)])
    with pytest.raises(GraphError):
        add_edges(P3, [(0, 5)])


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    assert Graph(3, frozenset({(1, 0)})) == Graph(3, frozenset({(0, 1)}))


def test_complement_edges():
    assert complement_edges(complete(4)) == []
    assert complement_edges(Graph.from_edges(3, [(0, 1), (1, 2)])) == [(0, 2)]
    non = complement_edges(star(6))
    assert len(non) == 15 and non == sorted(non)


def test_distances_examples():
    P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert P4.distances[0, 3] == 3
    assert star(5).distances[1, 2] == 2
    L = l3n(3)
    assert L.distances[1, 7] == 4  # leaf of spine 1 to leaf of spine 3


def test_disconnected_marker_fails_loudly():
    G = Graph.from_edges(3, [(0, 1)])
    assert G.distances[0, 2] is UNREACHABLE
    with pytest.raises(TypeError):
        G.distances[0, 2] + 1
    with pytest.raises(DisconnectedGraphError):
        diameter(G)


def test_diameter_examples():
    assert all(diameter(complete(n)) == 1 for n in range(2, 8))
    assert diameter(star(6)) == 2
    for k in range(1, 5):
        assert diameter(t_k(k)) == 2 * k


def test_k_neighbourhood():
    P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert k_neighbourhood(P4, 0, 3) == {3}
    assert k_neighbourhood(star(5), 0, 1) == {1, 2, 3, 4, 5}
    assert all(len(k_neighbourhood(cycle(6), v, 3)) == 1 for v in range(6))
    assert k_neighbourhood(P4, 2, 0) == {2}
    with pytest.raises(GraphError):
        k_neighbourhood(P4, 9, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_distance_properties(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    G = random_connected_graph(rng, n, rng.uniform(0.2, 0.7))
    d = G.distances
    ref = nx_distances(G)
    for u in range(n):
        for v in range(n):
            assert d[u, v] == ref[u][v] == d[v, u]
            assert (d[u, v] == 1) == G.has_edge(u, v)
    non = complement_edges(G)
    extra = rng.sample(non, min(len(non), rng.randint(0, 3)))
    H = add_edges(G, extra)
    assert all(H.distances[u, v] <= d[u, v] for u in range(n) for v in range(n))
    assert diameter(H) <= diameter(G)
