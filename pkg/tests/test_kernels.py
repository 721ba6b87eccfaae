import os
import random
import subprocess
import sys
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_connected_graph
from threshdim import _pykernels as py
from threshdim import kernels

cy = pytest.importorskip("threshdim._kernels", reason="compiled extension not built")


def _case(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    G = random_connected_graph(rng, n, rng.uniform(0.25, 0.8))
    return G, G.distances.as_lists(), list(G.masks)


def test_compiled_kernels_selected_by_default():
    assert kernels.IMPLEMENTATION == "cython"


def test_env_var_forces_python_fallback():
    code = "from threshdim import kernels; print(kernels.IMPLEMENTATION)"
    env = dict(os.environ, THRESHDIM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**9))
def test_parity_resolving_search(seed):
    G, dist, masks = _case(seed)
    n = G.n
    assert py.apsp(n, masks) == cy.apsp(n, masks)
    for k in range(n + 1):
        assert py.first_resolving_subset(n, dist, k) == cy.first_resolving_subset(n, dist, k)
    assert py.min_resolving_subset(n, dist, 1, n) == cy.min_resolving_subset(n, dist, 1, n)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9), st.booleans(), st.integers(1, 3))
def test_parity_supergraph_sweeps(seed, short, lo):
    G, dist, masks = _case(seed)
    cand = [e for e in combinations(range(G.n), 2) if e not in G.edges]
    if len(cand) > 12:
        cand = cand[:12]
    assert py.sweep_supergraphs(G.n, masks, cand, lo, short) == cy.sweep_supergraphs(
        G.n, masks, cand, lo, short
    )
    assert py.resolvable_landmark_sets(G.n, masks, cand, 2) == cy.resolvable_landmark_sets(
        G.n, masks, cand, 2
    )


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_parity_embedding_search(seed):
    G, dist, masks = _case(seed)
    rng = random.Random(seed)
    side = max(map(max, dist)) + 1
    rank = list(range(G.n))
    rng.shuffle(rank)
    for k in (1, 2, 3):
        if k > G.n:
            break
        W = rng.sample(range(G.n), k)
        assert py.embedding_search(G.n, dist, W, side, rank) == cy.embedding_search(
            G.n, dist, W, side, rank
        )


def test_first_resolving_subset_is_lexicographic_minimum():
    rng = random.Random(11)
    for _ in range(40):
        G = random_connected_graph(rng, rng.randint(3, 8), 0.4)
        dist = G.distances.as_lists()
        for k in range(1, G.n):
            expect = next(
                (W for W in combinations(range(G.n), k)
                 if len({tuple(dist[w][x] for w in W) for x in range(G.n)}) == G.n),
                None,
            )
            assert kernels.first_resolving_subset(G.n, dist, k) == expect


def test_apsp_beyond_bitmask_width_falls_back():
    from threshdim.families import path

    P = path(70)
    assert P.distances[0, 69] == 69


@pytest.mark.parametrize("mod", [py, cy], ids=["python", "cython"])
def test_full_sweep_does_not_trust_the_bound(mod):
    # star K_{1,6}: the optimum is 3, so a claimed bound of 5 must be ignored
    masks = [0b1111110] + [1] * 6
    cand = [(u, v) for u, v in combinations(range(1, 7), 2)]
    best, wit, basis, examined = mod.sweep_supergraphs(7, masks, cand, 5, False)
    assert (best, examined) == (3, 2**15)
    honest = mod.sweep_supergraphs(7, masks, cand, 0, False)
    assert honest == (best, wit, basis, examined)


def test_benchmark_quick_run():
    from pathlib import Path

    script = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"
    out = subprocess.run(
        [sys.executable, str(script), "--quick", "--repeat", "1"], capture_output=True, text=True, check=True
    )
    assert out.stdout.count("x\n") == 4
