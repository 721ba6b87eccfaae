import json
import random
from itertools import combinations

import networkx as nx
import pytest

from oracles import brute_metric_dimension, nx_distances, random_connected_graph, resolves
from threshdim.families import complete, complete_bipartite, cycle, figure4_graph, path, star
from threshdim.graph import DisconnectedGraphError, Graph, GraphError, diameter
from threshdim.metric import (
    ResolvingCertificate,
    ball_lower_bound,
    hernando_order_bound,
    is_resolving,
    log_lower_bound,
    metric_dimension_exact,
    neighbourhood_bound_holds,
    neighbourhood_lower_bound,
)


def test_is_resolving_examples():
    cert = is_resolving(path(4), [0])
    assert cert is not None and cert.vectors == ((0,), (1,), (2,), (3,))
    assert is_resolving(star(5), [1, 2]) is None
    assert is_resolving(star(5), [1, 2, 3, 4]) is not None


def test_is_resolving_errors():
    with pytest.raises(GraphError):
        is_resolving(path(3), [])
    with pytest.raises(DisconnectedGraphError):
        is_resolving(Graph.from_edges(3, [(0, 1)]), [0])
    with pytest.raises(GraphError):
        is_resolving(path(3), [5])


def test_certificate_invariants_and_json():
    cert = is_resolving(cycle(6), [0, 1])
    for i, w in enumerate(cert.W):
        assert cert.vectors[w][i] == 0
    obj = json.loads(json.dumps(cert.to_json()))
    assert set(obj) == {"W", "vectors"} and obj["vectors"]["3"] == [3, 2]
    back = ResolvingCertificate.from_json(obj)
    assert back == cert and back.check(cycle(6))


@pytest.mark.parametrize("n", range(2, 9))
def test_extremal_dimensions(n):
    assert metric_dimension_exact(path(n)).beta == 1
    assert metric_dimension_exact(complete(n)).beta == n - 1


def test_k4_with_pendants_dimension():
    assert metric_dimension_exact(figure4_graph()).beta == 3


def test_exact_solver_matches_brute_force_and_is_lex_first():
    rng = random.Random(5)
    for _ in range(80):
        G = random_connected_graph(rng, rng.randint(2, 8), rng.uniform(0.2, 0.8))
        beta, basis, cert = metric_dimension_exact(G)
        ref_beta, ref_basis = brute_metric_dimension(G)
        assert (beta, basis) == (ref_beta, ref_basis)
        assert cert.check(G)
        dist = nx_distances(G)
        for W in combinations(range(G.n), beta):
            if W == basis:
                break
            assert not resolves(dist, G.n, W)


def test_log_lower_bound():
    assert log_lower_bound(7, 2) == 2
    assert log_lower_bound(2, 1) == 1
    assert log_lower_bound(17, 4) == 2
    assert log_lower_bound(9, 2) == 2 and log_lower_bound(10, 2) == 3


def test_neighbourhood_bound_holds_examples():
    assert all(neighbourhood_bound_holds(cycle(6), W) for W in combinations(range(6), 2))
    assert not neighbourhood_bound_holds(star(6), [0, 1])
    assert neighbourhood_bound_holds(path(5), [0])


def test_neighbourhood_lower_bound_examples():
    assert neighbourhood_lower_bound(path(6)) == 1
    assert neighbourhood_lower_bound(cycle(6)) == 2
    # a leaf of K_{1,6} has shells of sizes 1 and 5, within 3 and 5 for b = 2
    assert neighbourhood_lower_bound(star(6)) == 2


def _connected_graphs_up_to(n_max):
    for n in range(2, n_max + 1):
        for H in nx.graph_atlas_g():
            if H.number_of_nodes() == n and nx.is_connected(H):
                yield Graph.from_edges(n, H.edges())


def test_bounds_below_exact_dimension_on_all_small_graphs():
    count = 0
    for G in _connected_graphs_up_to(7):
        md = metric_dimension_exact(G)
        assert md.beta >= neighbourhood_lower_bound(G)
        assert md.beta >= ball_lower_bound(G)
        assert md.beta >= log_lower_bound(G.n, diameter(G))
        assert neighbourhood_bound_holds(G, md.basis)
        count += 1
    assert count == 1 + 2 + 6 + 21 + 112 + 853


def test_hernando_order_bound_values():
    assert hernando_order_bound(2, 2) == 6
    assert hernando_order_bound(4, 2) == 17
    assert hernando_order_bound(1, 1) == 2


def test_hernando_order_bound_monotone():
    for D in range(1, 13):
        for b in range(1, 13):
            v = hernando_order_bound(D, b)
            assert hernando_order_bound(D + 1, b) >= v
            assert hernando_order_bound(D, b + 1) >= v


def test_bipartite_dimension():
    for n in (5, 6):
        for s in range(1, n):
            assert metric_dimension_exact(complete_bipartite(s, n - s)).beta == n - 2
