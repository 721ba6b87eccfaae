"""Embeddings into strong powers of paths.

A :class:`LatticeEmbedding` places every vertex of ``G`` at a point of
``{0..side-1}^k``. Two points are adjacent in the strong power exactly when
their Chebyshev distance is 1. The embedding is *W-resolved* when each
vertex's ``i``-th coordinate equals its hop distance to landmark ``w_i`` in
the supergraph ``H`` that the image induces. In that case ``W`` resolves
``H``, and conversely the distance vectors of any resolving set form such an
embedding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .graph import Graph, GraphError, diameter, require_connected
from .metric import is_resolving

Point = tuple[int, ...]


class EmbeddingError(GraphError):
    pass


def chebyshev_distance(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise ValueError(f"vectors of different lengths {len(x)} and {len(y)}")
    return max((abs(a - b) for a, b in zip(x, y)), default=0)


def lattice_adjacent(x: Sequence[int], y: Sequence[int]) -> bool:
    return chebyshev_distance(x, y) == 1


@dataclass(frozen=True)
class LatticeEmbedding:
    k: int
    side: int
    landmarks: tuple[int, ...]
    coords: tuple[Point, ...]  # indexed by vertex

    def __post_init__(self) -> None:
        if len(self.landmarks) != self.k:
            raise EmbeddingError(f"{len(self.landmarks)} landmarks for k = {self.k}")
        for v, p in enumerate(self.coords):
            if len(p) != self.k:
                raise EmbeddingError(f"vertex {v} has {len(p)} coordinates, expected {self.k}")
            if not all(0 <= c < self.side for c in p):
                raise EmbeddingError(f"vertex {v} at {p} lies outside 0..{self.side - 1}")

    @property
    def n(self) -> int:
        return len(self.coords)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "side": self.side,
            "landmarks": list(self.landmarks),
            "coords": {str(v): list(p) for v, p in enumerate(self.coords)},
        }

    @classmethod
    def from_json(cls, obj: dict) -> LatticeEmbedding:
        try:
            coords = obj["coords"]
            n = len(coords)
            pts = tuple(tuple(int(c) for c in coords[str(v)]) for v in range(n))
            return cls(int(obj["k"]), int(obj["side"]), tuple(int(w) for w in obj["landmarks"]), pts)
        except (KeyError, TypeError, ValueError) as exc:
            raise EmbeddingError(f"malformed embedding JSON: {exc!r}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> LatticeEmbedding:
        return cls.from_json(json.loads(text))


def _shape_problem(G: Graph, emb: LatticeEmbedding) -> Optional[str]:
    """First violated type invariant of ``emb`` against ``G``, or ``None``."""
    if emb.n != G.n:
        return f"embedding covers {emb.n} vertices, graph has {G.n}"
    if len(set(emb.landmarks)) != emb.k or not all(0 <= w < G.n for w in emb.landmarks):
        return f"landmarks {list(emb.landmarks)} are not distinct vertices"
    seen: dict[Point, int] = {}
    for v, p in enumerate(emb.coords):
        if p in seen:
            return f"vertices {seen[p]} and {v} share the point {list(p)}"
        seen[p] = v
    for i, w in enumerate(emb.landmarks):
        if emb.coords[w][i] != 0:
            return f"landmark {w} has coordinate {i} equal to {emb.coords[w][i]}, not 0"
    for u, v in G.sorted_edges:
        if not lattice_adjacent(emb.coords[u], emb.coords[v]):
            return f"edge ({u}, {v}) maps to non-adjacent points {list(emb.coords[u])}, {list(emb.coords[v])}"
    return None


def induced_supergraph(G: Graph, emb: LatticeEmbedding) -> Graph:
    """The graph on ``V(G)`` joining vertices whose images are lattice-adjacent."""
    problem = _shape_problem(G, emb)
    if problem is not None:
        raise EmbeddingError(problem)
    C = emb.coords
    edges = [
        (u, v)
        for u in range(G.n)
        for v in range(u + 1, G.n)
        if chebyshev_distance(C[u], C[v]) == 1
    ]
    return Graph.from_edges(G.n, edges)


def w_resolved_diagnostic(G: Graph, emb: LatticeEmbedding) -> Optional[str]:
    """``None`` if ``emb`` is W-resolved for ``G``, else a description of the first failure.

    Mismatches are reported for the lowest vertex id, then the lowest
    coordinate index.
    """
    problem = _shape_problem(G, emb)
    if problem is not None:
        return problem
    H = induced_supergraph(G, emb)
    d = H.distances.d
    for x in range(G.n):
        for i, w in enumerate(emb.landmarks):
            if d[w][x] != emb.coords[x][i]:
                return (
                    f"vertex {x} coordinate {i} is {emb.coords[x][i]} but its distance "
                    f"to landmark {w} in the induced supergraph is {d[w][x]}"
                )
    return None


def verify_w_resolved(G: Graph, emb: LatticeEmbedding) -> bool:
    return w_resolved_diagnostic(G, emb) is None


def embedding_from_resolving_set(G: Graph, W: Sequence[int]) -> LatticeEmbedding:
    """Distance-vector embedding of ``G`` for a resolving list ``W``."""
    cert = is_resolving(G, W)
    if cert is None:
        raise EmbeddingError(f"{list(W)} does not resolve the graph")
    side = diameter(G) + 1
    emb = LatticeEmbedding(len(cert.W), side, cert.W, cert.vectors)
    assert verify_w_resolved(G, emb)
    return emb


def _degree_rank(G: Graph) -> list[int]:
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    rank = [0] * G.n
    for r, v in enumerate(order):
        rank[v] = r
    return rank


@dataclass(frozen=True)
class SearchOutcome:
    embedding: Optional[LatticeEmbedding]
    nodes: int


def search_w_resolved_embedding(
    G: Graph, W: Sequence[int], side: Optional[int] = None
) -> SearchOutcome:
    """Complete backtracking search; reports the node count alongside the answer."""
    require_connected(G)
    Wt = tuple(W)
    if not Wt or len(set(Wt)) != len(Wt) or not all(0 <= w < G.n for w in Wt):
        raise GraphError(f"invalid landmark list {list(Wt)}")
    D = diameter(G) if G.n > 1 else 0
    if side is None:
        side = D + 1
    if side < 1:
        raise ValueError("side must be positive")
    if side > D + 1:
        raise ValueError(f"side {side} exceeds diameter + 1 = {D + 1}, which always suffices")
    coords, nodes = kernels.embedding_search(
        G.n, G.distances.as_lists(), list(Wt), side, _degree_rank(G)
    )
    if coords is None:
        return SearchOutcome(None, nodes)
    emb = LatticeEmbedding(len(Wt), side, Wt, tuple(tuple(p) for p in coords))
    problem = w_resolved_diagnostic(G, emb)
    if problem is not None:
        raise AssertionError(f"search returned an embedding that fails verification: {problem}")
    return SearchOutcome(emb, nodes)


def exists_w_resolved_embedding(
    G: Graph, W: Sequence[int], side: Optional[int] = None
) -> Optional[LatticeEmbedding]:
    return search_w_resolved_embedding(G, W, side).embedding
