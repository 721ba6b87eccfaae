import random
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_landmark_resolvable, random_connected_graph
from threshdim.embedding import (
    EmbeddingError,
    LatticeEmbedding,
    chebyshev_distance,
    embedding_from_resolving_set,
    exists_w_resolved_embedding,
    induced_supergraph,
    lattice_adjacent,
    search_w_resolved_embedding,
    verify_w_resolved,
    w_resolved_diagnostic,
)
from threshdim.families import complete, cycle, path, star
from threshdim.graph import Graph
from threshdim.metric import is_resolving, metric_dimension_exact

EIGHT = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (4, 6), (4, 0), (5, 7), (3, 7)])
EIGHT_COORDS = {4: (0, 3), 1: (1, 2), 0: (1, 3), 6: (1, 4), 5: (3, 0), 2: (2, 1), 3: (3, 2), 7: (4, 1)}
STAR5_COORDS = ((1, 1), (0, 2), (2, 0), (1, 2), (2, 2), (2, 1))


def test_chebyshev_examples():
    assert chebyshev_distance((0, 0), (0, 0)) == 0
    assert chebyshev_distance((0, 3), (3, 0)) == 3
    assert chebyshev_distance((1, 2), (3, 1)) == 2
    with pytest.raises(ValueError):
        chebyshev_distance((1,), (1, 2))


def test_lattice_adjacent_examples():
    assert lattice_adjacent((0, 0), (1, 1))
    assert not lattice_adjacent((0, 0), (2, 0))
    assert lattice_adjacent((1, 2), (2, 2))
    with pytest.raises(ValueError):
        lattice_adjacent((0,), (0, 1))


vec = st.lists(st.integers(-20, 20), min_size=3, max_size=3)


@given(vec, vec, vec)
def test_chebyshev_is_a_metric(x, y, z):
    assert chebyshev_distance(x, y) >= 0
    assert (chebyshev_distance(x, y) == 0) == (x == y)
    assert chebyshev_distance(x, y) == chebyshev_distance(y, x)
    assert chebyshev_distance(x, z) <= chebyshev_distance(x, y) + chebyshev_distance(y, z)


def test_distance_vectors_of_a_basis():
    emb = embedding_from_resolving_set(EIGHT, [4, 5])
    assert {v: emb.coords[v] for v in range(8)} == EIGHT_COORDS
    H = induced_supergraph(EIGHT, emb)
    assert H.edges - EIGHT.edges == {(0, 6)}
    assert verify_w_resolved(EIGHT, emb)


def test_hand_placed_star_embedding():
    emb = LatticeEmbedding(2, 3, (1, 2), STAR5_COORDS)
    assert verify_w_resolved(star(5), emb)
    H = induced_supergraph(star(5), emb)
    assert H.m == 10
    assert is_resolving(H, [1, 2]) is not None


def test_trivial_embeddings():
    P2 = path(2)
    emb = LatticeEmbedding(1, 2, (0,), ((0,), (1,)))
    assert induced_supergraph(P2, emb) == P2
    emb = embedding_from_resolving_set(path(3), [0])
    assert emb.coords == ((0,), (1,), (2,))
    C4 = cycle(4)
    emb = embedding_from_resolving_set(C4, [0, 1])
    assert len(set(emb.coords)) == 4 and emb.side == 3 and verify_w_resolved(C4, emb)


def test_k4_never_embeds_in_2x2_grid():
    K4 = complete(4)
    pts = list(product(range(2), repeat=2))
    for W in permutations(range(4), 2):
        for perm in permutations(pts):
            emb = LatticeEmbedding(2, 2, W, tuple(perm))
            assert not verify_w_resolved(K4, emb)


def test_diagnostic_names_first_failure():
    emb = LatticeEmbedding(2, 3, (1, 2), ((1, 1), (0, 2), (2, 0), (1, 2), (2, 2), (0, 1)))
    msg = w_resolved_diagnostic(star(5), emb)
    assert msg is not None and msg.startswith("vertex 5 coordinate 0")
    bad = LatticeEmbedding(1, 4, (0,), ((0,), (2,), (3,)))
    assert "non-adjacent" in w_resolved_diagnostic(path(3), bad)
    with pytest.raises(EmbeddingError):
        induced_supergraph(path(3), bad)


def test_embedding_json_round_trip():
    emb = embedding_from_resolving_set(EIGHT, [4, 5])
    back = LatticeEmbedding.loads(emb.dumps())
    assert back == emb
    assert set(emb.to_json()) == {"k", "side", "landmarks", "coords"}
    with pytest.raises(EmbeddingError):
        LatticeEmbedding.from_json({"k": 1})
    with pytest.raises(EmbeddingError):
        LatticeEmbedding(1, 2, (0,), ((0,), (2,)))


def test_basis_vectors_embed_on_random_graphs():
    rng = random.Random(7)
    for _ in range(60):
        G = random_connected_graph(rng, rng.randint(2, 8), rng.uniform(0.2, 0.8))
        basis = metric_dimension_exact(G).basis
        emb = embedding_from_resolving_set(G, basis)
        assert verify_w_resolved(G, emb)


def test_search_examples():
    assert exists_w_resolved_embedding(star(5), [1, 2], 3) is not None
    for W in combinations(range(7), 2):
        assert exists_w_resolved_embedding(star(6), W, 3) is None
    emb = exists_w_resolved_embedding(path(4), [0], 4)
    assert emb.coords == ((0,), (1,), (2,), (3,))
    with pytest.raises(ValueError):
        exists_w_resolved_embedding(path(4), [0], 9)


def test_search_equivalence_small_exhaustive():
    rng = random.Random(13)
    for _ in range(25):
        G = random_connected_graph(rng, rng.randint(3, 6), rng.uniform(0.3, 0.7))
        Ws = [W for k in (1, 2) for W in combinations(range(G.n), k)]
        if G.n >= 4:
            Ws += rng.sample(list(combinations(range(G.n), 3)), 3)
        for W in Ws:
            res = search_w_resolved_embedding(G, W)
            assert (res.embedding is not None) == brute_landmark_resolvable(G, W)
            if res.embedding is not None:
                emb = res.embedding
                H = induced_supergraph(G, emb)
                assert is_resolving(H, W) is not None
                for i, j in product(range(len(W)), repeat=2):
                    assert emb.coords[W[i]][j] == emb.coords[W[j]][i]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_search_agrees_with_kernel_brute_force(seed):
    from threshdim import kernels

    rng = random.Random(seed)
    G = random_connected_graph(rng, rng.randint(3, 7), rng.uniform(0.3, 0.8))
    cand = [e for e in combinations(range(G.n), 2) if e not in G.edges]
    good = kernels.resolvable_landmark_sets(G.n, list(G.masks), cand, 2)
    for W in (W for k in (1, 2) for W in combinations(range(G.n), k)):
        assert (exists_w_resolved_embedding(G, W) is not None) == (W in good)
