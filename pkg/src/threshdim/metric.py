"""Resolving sets, exact metric dimension, and lower bounds on dimension."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .graph import Graph, GraphError, diameter, require_connected


@dataclass(frozen=True)
class ResolvingCertificate:
    """Landmarks ``W`` (in order) and every vertex's distance vector to them."""

    W: tuple[int, ...]
    vectors: tuple[tuple[int, ...], ...]

    def check(self, G: Graph) -> bool:
        """Recompute the vectors on ``G`` and confirm they match and are distinct."""
        d = G.distances.d
        if len(self.vectors) != G.n:
            return False
        for x in range(G.n):
            if self.vectors[x] != tuple(d[w][x] for w in self.W):
                return False
        return len(set(self.vectors)) == G.n

    def to_json(self) -> dict:
        return {"W": list(self.W), "vectors": {str(v): list(t) for v, t in enumerate(self.vectors)}}

    @classmethod
    def from_json(cls, obj: dict) -> ResolvingCertificate:
        vec = obj["vectors"]
        return cls(tuple(obj["W"]), tuple(tuple(vec[str(v)]) for v in range(len(vec))))


def _landmarks(G: Graph, W: Iterable[int]) -> tuple[int, ...]:
    Wt = tuple(W)
    if not Wt:
        raise GraphError("landmark set is empty")
    for w in Wt:
        if not 0 <= w < G.n:
            raise GraphError(f"landmark {w} outside 0..{G.n - 1}")
    if len(set(Wt)) != len(Wt):
        raise GraphError(f"repeated landmark in {Wt}")
    return Wt


def is_resolving(G: Graph, W: Iterable[int]) -> Optional[ResolvingCertificate]:
    """A certificate if the distance vectors to ``W`` are pairwise distinct, else ``None``."""
    require_connected(G)
    Wt = _landmarks(G, W)
    d = G.distances.d
    vectors = tuple(tuple(d[w][x] for w in Wt) for x in range(G.n))
    if len(set(vectors)) != G.n:
        return None
    return ResolvingCertificate(Wt, vectors)


@dataclass(frozen=True)
class MetricDimension:
    beta: int
    basis: tuple[int, ...]
    certificate: ResolvingCertificate

    def __iter__(self):
        return iter((self.beta, self.basis, self.certificate))


def metric_dimension_exact(G: Graph) -> MetricDimension:
    """Minimum resolving set, lexicographically first among those of minimum size."""
    require_connected(G)
    if G.n < 2:
        raise GraphError("metric dimension needs at least two vertices")
    hit = kernels.min_resolving_subset(G.n, G.distances.as_lists(), 1, G.n)
    assert hit is not None, "V(G) always resolves G"
    beta, basis = hit
    cert = is_resolving(G, basis)
    assert cert is not None
    return MetricDimension(beta, tuple(basis), cert)


# ---------------------------------------------------------------------------
# bounds


def log_lower_bound(n: int, D: int) -> int:
    """Smallest ``b`` with ``(D+1)**b >= n``: each vertex needs its own vector in ``{0..D}^b``."""
    if n < 1 or D < 1:
        raise ValueError("log_lower_bound needs n >= 1 and D >= 1")
    b, reach = 0, 1
    while reach < n:
        b += 1
        reach *= D + 1
    return b


def _shell_sizes(G: Graph, v: int) -> list[int]:
    """``sizes[k] = |N_k(v)|`` for ``k = 0..ecc(v)``."""
    row = G.distances.d[v]
    ecc = max(row)
    sizes = [0] * (ecc + 1)
    for x in row:
        sizes[x] += 1
    return sizes


def neighbourhood_bound_holds(G: Graph, W: Sequence[int]) -> bool:
    """Every landmark has ``|N_k(w)| <= (2k+1)**(|W|-1)`` for ``1 <= k <= diameter``.

    Points of a ``b``-landmark vector space at distance exactly ``k`` from the
    landmark share coordinate ``k`` at that landmark's position and differ by
    at most ``k`` elsewhere, which caps the shell size.
    """
    require_connected(G)
    Wt = _landmarks(G, W)
    b = len(Wt)
    for w in Wt:
        for k, size in enumerate(_shell_sizes(G, w)):
            if k >= 1 and size > (2 * k + 1) ** (b - 1):
                return False
    return True


def _least_b(G: Graph, fits) -> int:
    b = 1
    while True:
        if any(fits(v, b) for v in range(G.n)):
            return b
        b += 1


def neighbourhood_lower_bound(G: Graph) -> int:
    """Smallest ``b`` for which some vertex passes the shell-size test.

    Every landmark of a resolving set of size ``b`` passes it, so no such set
    exists for smaller ``b``. Valid for ``beta(G)`` only; the shells of ``G``
    say nothing about those of a supergraph.
    """
    require_connected(G)
    shells = [_shell_sizes(G, v) for v in range(G.n)]

    def fits(v: int, b: int) -> bool:
        return all(s <= (2 * k + 1) ** (b - 1) for k, s in enumerate(shells[v]) if k >= 1)

    return _least_b(G, fits)


def ball_lower_bound(G: Graph) -> int:
    """Lower bound on the metric dimension of every spanning supergraph of ``G``.

    In a supergraph ``H`` the ball of radius ``k`` around a vertex only grows,
    and in ``H`` a landmark's ball holds at most ``sum_{j<=k} (2j+1)**(b-1)``
    vertices. So some vertex of ``G`` must satisfy
    ``|B_k^G(v)| <= sum_{j<=k} (2j+1)**(b-1)`` for every ``k >= 1``.
    """
    require_connected(G)
    shells = [_shell_sizes(G, v) for v in range(G.n)]

    def fits(v: int, b: int) -> bool:
        ball = cap = 0
        for k, s in enumerate(shells[v]):
            ball += s
            cap += (2 * k + 1) ** (b - 1)
            if ball > cap:
                return False
        return True

    return _least_b(G, fits)


def hernando_order_bound(D: int, b: int) -> int:
    """Largest order of a graph with diameter ``D`` and metric dimension ``b``."""
    if D < 1 or b < 1:
        raise ValueError("hernando_order_bound needs D >= 1 and b >= 1")
    return (2 * D // 3 + 1) ** b + b * sum((2 * i - 1) ** (b - 1) for i in range(1, -(-D // 3) + 1))


def graph_log_lower_bound(G: Graph) -> int:
    require_connected(G)
    if G.n < 2:
        return 0
    return log_lower_bound(G.n, diameter(G))
