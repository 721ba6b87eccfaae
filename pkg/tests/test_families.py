from itertools import product

import networkx as nx
import pytest

from oracles import nx_graph, slater
from threshdim.embedding import induced_supergraph, verify_w_resolved
from threshdim.families import (
    FamilyError,
    FamilySpec,
    figure4_graph,
    figure4_plan,
    k16_subdivision_embedding,
    l3n,
    l3n_embedding,
    make,
    packaged_embedding,
    star,
    subdivided_star,
    t5_embedding,
    t_k,
)
from threshdim.graph import diameter
from threshdim.metric import is_resolving


@pytest.mark.parametrize(
    "text,n,m",
    [
        ("path:5", 5, 4),
        ("cycle:6", 6, 6),
        ("complete:4", 4, 6),
        ("star:6", 7, 6),
        ("complete_bipartite:2:3", 5, 6),
        ("l3n:4", 12, 11),
        ("t_k:2", 18, 17),
        ("subdivided_star:6:2,1,1,1,1,1", 8, 7),
        ("subdivided_star:8:2", 17, 16),
        ("figure4", 6, 8),
        ("random_tree:8:42", 8, 7),
    ],
)
def test_make_from_spec(text, n, m):
    G = make(text)
    assert (G.n, G.m) == (n, m)


def test_spec_round_trip():
    for text in ("t_k:5", "l3n:4", "subdivided_star:6:2,1,1,1,1,1", "random_tree:9:3", "complete_bipartite:2:4"):
        assert str(FamilySpec.parse(text)) == text
    assert str(FamilySpec.parse("random_tree:9")) == "random_tree:9:0"
    assert FamilySpec.parse("subdivided_star:3:2").params == (3, 2, 2, 2)


@pytest.mark.parametrize(
    "bad",
    ["nothing:3", "path", "path:x", "cycle:2", "subdivided_star:3:1,2", "subdivided_star:2:1,1", "star:1:2", "random_tree:1"],
)
def test_bad_specs(bad):
    with pytest.raises(FamilyError):
        make(bad)


def test_star_and_subdivision_shapes():
    assert slater(star(6)) == 5
    T = subdivided_star([2] * 8)
    assert (T.n, diameter(T)) == (17, 4)


@pytest.mark.parametrize("k", range(1, 6))
def test_t_k_invariants(k):
    T = t_k(k)
    assert T.n == (5 * k + 2) * (k + 1) // 2
    assert diameter(T) == 2 * k
    assert slater(T) == 5


def test_t1_is_k16():
    assert nx.is_isomorphic(nx_graph(t_k(1)), nx_graph(star(6)))


@pytest.mark.parametrize("n", range(2, 7))
def test_l3n_embedding(n):
    emb = l3n_embedding(n)
    assert emb.k == 2 and emb.n == 3 * n
    assert {emb.coords[w] for w in emb.landmarks} == {(0, 1), (1, 0)}
    assert verify_w_resolved(l3n(n), emb)
    assert slater(l3n(n)) == n


@pytest.mark.parametrize("legs", [(2, 1, 1, 1, 1, 1), (2, 2, 2, 2, 2, 2), (3, 1, 1, 1, 1, 1), (1, 3, 1, 2, 1, 1)])
def test_k16_subdivisions(legs):
    emb = k16_subdivision_embedding(legs)
    G = subdivided_star(legs)
    assert verify_w_resolved(G, emb)
    assert is_resolving(induced_supergraph(G, emb), emb.landmarks)


def test_k16_all_small_profiles():
    for legs in product(range(1, 4), repeat=6):
        if max(legs) >= 2:
            assert verify_w_resolved(subdivided_star(legs), k16_subdivision_embedding(legs))


def test_k16_rejects_unsubdivided():
    with pytest.raises(FamilyError):
        k16_subdivision_embedding([1] * 6)
    with pytest.raises(FamilyError):
        k16_subdivision_embedding([2] * 5)


def test_t5_embedding():
    emb = t5_embedding()
    assert (emb.k, emb.side, emb.n) == (2, 11, 81)
    H = induced_supergraph(t_k(5), emb)
    assert is_resolving(H, emb.landmarks)


def test_k4_with_pendants_plan():
    G, plan = figure4_plan()
    assert G == figure4_graph()
    assert plan.added_edges == ((0, 4), (0, 5))
    assert plan.verify(G)


def test_packaged_lookup():
    assert packaged_embedding("t_k:5") == t5_embedding()
    assert packaged_embedding("l3n:3") == l3n_embedding(3)
    assert packaged_embedding("subdivided_star:6:2") is not None
    assert packaged_embedding("star:6") is None
    assert packaged_embedding("t_k:4") is None
