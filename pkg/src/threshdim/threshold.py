"""Threshold dimension: the least metric dimension over all spanning supergraphs.

Two independent exact methods are provided. The supergraph sweep computes the
metric dimension of ``G + E`` for every set ``E`` of non-edges. The embedding
method instead asks, for growing ``k`` and each ``k``-set ``W``, whether a
W-resolved embedding of ``G`` exists. Each success is a witness supergraph
in which ``W`` resolves, so the first ``k`` with a success is the answer.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from . import kernels
from .graph import Edge, Graph, GraphError, add_edges, complement_edges, diameter, require_connected
from .metric import (
    ball_lower_bound,
    hernando_order_bound,
    is_resolving,
    log_lower_bound,
    metric_dimension_exact,
)
from .trees import require_tree, tree_metric_dimension

DEFAULT_SUPERGRAPH_CAP = 22
BOUND_SOURCES = ("log", "ball", "hernando")


class CapExceeded(GraphError):
    """The instance is beyond a configured search cap; no answer was produced."""


def g_function(n: int) -> int:
    """Least ``d >= 0`` with ``2**d + d >= n``."""
    if n < 1:
        raise ValueError("g is defined for n >= 1")
    d = 0
    while 2**d + d < n:
        d += 1
    return d


def _edges(E: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in E))


@dataclass(frozen=True)
class EdgeAdditionPlan:
    added_edges: tuple[Edge, ...]
    claimed_resolving_set: tuple[int, ...]
    claimed_dimension: int

    def augmented(self, G: Graph) -> Graph:
        return add_edges(G, self.added_edges)

    def verify(self, G: Graph) -> bool:
        if len(self.claimed_resolving_set) != self.claimed_dimension:
            return False
        try:
            H = self.augmented(G)
        except GraphError:
            return False
        return is_resolving(H, self.claimed_resolving_set) is not None

    def to_json(self) -> dict:
        return {
            "added_edges": [list(e) for e in self.added_edges],
            "claimed_resolving_set": list(self.claimed_resolving_set),
            "claimed_dimension": self.claimed_dimension,
        }


def make_plan(G: Graph, edges: Iterable[Sequence[int]], W: Iterable[int]) -> EdgeAdditionPlan:
    """Build a plan and verify it against ``G``; a failing plan is a bug, so it raises."""
    Wt = tuple(sorted(W))
    plan = EdgeAdditionPlan(_edges(edges), Wt, len(Wt))
    if not plan.verify(G):
        raise AssertionError(f"edge-addition plan does not verify: {plan.to_json()}")
    return plan


@dataclass(frozen=True)
class ThresholdCertificate:
    tau: int
    witness_edges: tuple[Edge, ...]
    witness_basis: tuple[int, ...]
    method: str  # "supergraph-enumeration" or "embedding-search"
    lower_bound_proof: dict = field(default_factory=dict)

    def verify(self, G: Graph) -> bool:
        if len(self.witness_basis) != self.tau:
            return False
        if self.tau == 0:
            return G.n == 1
        return is_resolving(add_edges(G, self.witness_edges), self.witness_basis) is not None

    def to_json(self) -> dict:
        return {
            "tau": self.tau,
            "method": self.method,
            "witness_edges": [list(e) for e in self.witness_edges],
            "witness_basis": list(self.witness_basis),
            "lower_bound_proof": self.lower_bound_proof,
        }


# ---------------------------------------------------------------------------
# lower bounds


def hernando_tau_lower_bound(G: Graph) -> int:
    """Least ``b`` whose order bound at ``diameter(G)`` admits ``n`` vertices.

    Supergraphs never have larger diameter and the order bound grows with
    the diameter, so this also bounds ``tau``.
    """
    require_connected(G)
    if G.n < 2:
        return 0
    D = diameter(G)
    b = 1
    while hernando_order_bound(D, b) < G.n:
        b += 1
    return b


def tau_lower_bounds(G: Graph, sources: Iterable[str] = BOUND_SOURCES) -> dict[str, int]:
    require_connected(G)
    out = {}
    for s in sources:
        if s == "log":
            out[s] = log_lower_bound(G.n, diameter(G)) if G.n > 1 else 0
        elif s == "ball":
            out[s] = ball_lower_bound(G) if G.n > 1 else 0
        elif s == "hernando":
            out[s] = hernando_tau_lower_bound(G)
        else:
            raise ValueError(f"unknown bound source {s!r}; choose from {BOUND_SOURCES}")
    return out


def _start(G: Graph, sources: Iterable[str]) -> tuple[int, dict[str, int]]:
    vals = tau_lower_bounds(G, sources)
    return max([1, *vals.values()]), vals


# ---------------------------------------------------------------------------
# constructive upper bound for trees


def star_method(T: Graph) -> EdgeAdditionPlan:
    """A verified plan with at most ``g(n)`` landmarks for the tree ``T``.

    If the tree already has dimension at most ``g(n)`` nothing is added.
    Otherwise ``W`` is the ``g(n)`` lowest-id leaves; vertices outside ``W``
    with no neighbour in ``W`` each get a fresh subset of ``W`` as their new
    ``W``-neighbourhood, in order of size then lexicographically.
    """
    require_tree(T)
    n = T.n
    if n < 2:
        raise GraphError("star_method needs at least two vertices")
    g = g_function(n)
    if tree_metric_dimension(T) <= g:
        md = metric_dimension_exact(T)
        return make_plan(T, (), md.basis)
    leaves = [v for v in range(n) if T.degree(v) == 1]
    W = leaves[:g]
    Wset = set(W)
    X = [x for x in range(n) if x not in Wset]
    X1 = [x for x in X if T.adj[x] & Wset]
    X2 = [x for x in X if not T.adj[x] & Wset]
    realized = {frozenset(T.adj[x] & Wset) for x in X1}
    # W holds leaves, so X1 neighbourhoods are pairwise disjoint, hence distinct
    assert len(realized) == len(X1)
    pool = (
        frozenset(S)
        for size in range(g + 1)
        for S in combinations(W, size)
    )
    added = []
    for x in X2:
        S = next(S for S in pool if S not in realized)
        added.extend((x, w) for w in S)
    return make_plan(T, added, W)


# ---------------------------------------------------------------------------
# exact solvers


def threshold_via_supergraphs(
    G: Graph,
    cap: int = DEFAULT_SUPERGRAPH_CAP,
    short_circuit: bool = True,
    bounds: Iterable[str] = BOUND_SOURCES,
) -> ThresholdCertificate:
    """Exact ``tau`` by computing ``beta(G + E)`` for every set ``E`` of non-edges.

    The witness has the fewest added edges, then the lexicographically first
    edge set. With ``short_circuit`` the sweep stops once a supergraph meets
    the best lower bound; otherwise all ``2**m`` supergraphs are solved and the
    lower bound plays no part in the answer.
    """
    require_connected(G)
    if G.n < 2:
        return ThresholdCertificate(0, (), (), "supergraph-enumeration", {"kind": "trivial"})
    cand = complement_edges(G)
    if len(cand) > cap:
        raise CapExceeded(
            f"refused: cap ({len(cand)} complement edges exceed the supergraph cap of {cap})"
        )
    lo, vals = _start(G, bounds)
    best, wit, basis, examined = kernels.sweep_supergraphs(
        G.n, list(G.masks), cand, lo, short_circuit
    )
    assert best >= lo, "a lower bound exceeded an attained dimension"
    full = examined == 2 ** len(cand)
    proof = {
        "kind": "exhaustive-supergraph-sweep" if full else "lower-bound",
        "supergraphs_examined": examined,
        "complement_edges": len(cand),
        "complete_sweep": full,
        "bound": lo,
        "bound_sources": vals,
    }
    cert = ThresholdCertificate(
        best, tuple(cand[i] for i in wit), tuple(basis), "supergraph-enumeration", proof
    )
    assert cert.verify(G)
    return cert


def _search_job(args: tuple[int, tuple[Edge, ...], tuple[int, ...]]):
    from .embedding import search_w_resolved_embedding

    n, edges, W = args
    out = search_w_resolved_embedding(Graph(n, frozenset(edges)), W)
    return out.embedding, out.nodes


def threshold_via_embeddings(
    G: Graph,
    bounds: Iterable[str] = BOUND_SOURCES,
    jobs: int = 1,
    progress: Optional[Callable[[str], None]] = None,
    max_k: Optional[int] = None,
) -> ThresholdCertificate:
    """Exact ``tau`` as the least ``k`` admitting a W-resolved embedding with ``|W| = k``.

    ``k`` starts at the largest selected lower bound (``bounds`` picks from
    ``log``, ``ball`` and ``hernando``). Landmark sets of each size are tried
    in lexicographic order. With ``jobs > 1`` candidates are searched in
    worker processes, but the reported witness is still the lexicographically
    first success. The proof records how many candidates were refuted at
    each ``k``. ``max_k`` stops early and raises :class:`CapExceeded`.
    """
    from .embedding import induced_supergraph

    require_connected(G)
    if G.n < 2:
        return ThresholdCertificate(0, (), (), "embedding-search", {"kind": "trivial"})
    k0, vals = _start(G, bounds)
    refuted: dict[str, int] = {}
    nodes_total = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        k = k0
        while True:
            if max_k is not None and k > max_k:
                raise CapExceeded(f"refused: cap (no witness with at most {max_k} landmarks)")
            cands = list(combinations(range(G.n), k))
            args = [(G.n, G.sorted_edges, W) for W in cands]
            results = pool.map(_search_job, args, chunksize=4) if pool else map(_search_job, args)
            count = 0
            hit = None
            for W, (emb, nodes) in zip(cands, results):
                nodes_total += nodes
                if progress is not None:
                    progress(f"k={k} W={list(W)} {'SAT' if emb else 'UNSAT'} nodes={nodes}")
                if emb is not None:
                    hit = (W, emb)
                    break
                count += 1
            refuted[str(k)] = count
            if hit is not None:
                break
            k += 1
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    W, emb = hit
    H = induced_supergraph(G, emb)
    witness = tuple(sorted(H.edges - G.edges))
    proof = {
        "kind": "embedding-exhaustion",
        "start_k": k0,
        "bound_sources": vals,
        "refuted_landmark_sets": refuted,
        "search_nodes": nodes_total,
    }
    cert = ThresholdCertificate(k, witness, tuple(W), "embedding-search", proof)
    assert cert.verify(G)
    return cert


def threshold_dimension(G: Graph, method: str = "embeddings", **kw) -> ThresholdCertificate:
    if method == "embeddings":
        return threshold_via_embeddings(G, **kw)
    if method == "supergraphs":
        return threshold_via_supergraphs(G, **kw)
    raise ValueError(f"unknown method {method!r}")


def is_irreducible(G: Graph, method: str = "embeddings", **kw) -> bool:
    """Whether ``beta(G) == tau(G)``."""
    return metric_dimension_exact(G).beta == threshold_dimension(G, method, **kw).tau
