"""Time the compiled kernels against the pure-Python reference on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Both implementations are imported directly, so the selector and the
environment variable play no part. Results are checked for equality before
anything is timed.
"""

import argparse
import random
import sys
import timeit
from itertools import combinations

from threshdim import _pykernels as py
from threshdim.families import star, subdivided_star
from threshdim.graph import Graph, complement_edges

try:
    from threshdim import _kernels as cy
except ImportError:
    sys.exit("compiled extension not built; run: pip install -e . --no-build-isolation")


def random_graphs(count, n, p, seed=1):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        G = Graph.from_edges(n, edges)
        if G.is_connected():
            out.append(G)
    return out


def rank_of(G):
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    rank = [0] * G.n
    for r, v in enumerate(order):
        rank[v] = r
    return rank


def workloads(quick):
    graphs = random_graphs(20 if quick else 100, 10, 0.3)

    def apsp(mod):
        return [mod.apsp(G.n, list(G.masks)) for G in graphs]

    def basis(mod):
        return [mod.min_resolving_subset(G.n, G.distances.as_lists(), 1, G.n) for G in graphs]

    S = star(5 if quick else 6)
    cand = complement_edges(S)

    def sweep(mod):
        return mod.sweep_supergraphs(S.n, list(S.masks), cand, 0, False)

    T = subdivided_star([2] * (6 if quick else 8))
    dist, rank = T.distances.as_lists(), rank_of(T)
    pairs = list(combinations(range(T.n), 2))[: 20 if quick else 60]

    def embed(mod):
        return [mod.embedding_search(T.n, dist, list(W), 5, rank) for W in pairs]

    return [
        ("apsp, random n=10", apsp),
        ("metric basis, random n=10", basis),
        (f"full supergraph sweep, star n={S.n}", sweep),
        (f"embedding search, subdivided star n={T.n}", embed),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()
    print(f"{'workload':44} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in workloads(args.quick):
        if fn(py) != fn(cy):
            sys.exit(f"{name}: implementations disagree")
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:44} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
