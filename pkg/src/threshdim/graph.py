"""Simple undirected graphs on vertices ``0..n-1``, distances and file I/O.

Graphs are immutable values: every operation that "changes" a graph returns
a new one. Edge sets are stored canonically as ``(u, v)`` pairs with
``u < v``, and every sequence of edges we emit is sorted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from . import kernels

Edge = tuple[int, int]

#: Marker stored in a :class:`DistanceMatrix` for pairs in different components.
#: ``None`` makes accidental arithmetic raise instead of silently overflowing.
UNREACHABLE = None


class GraphError(ValueError):
    """Invalid graph data or a precondition on a graph that does not hold."""


class GraphFormatError(GraphError):
    """Malformed edge-list or graph6 input."""


class DisconnectedGraphError(GraphError):
    pass


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph, rejecting duplicate edges (in either orientation)."""
        seen: set[Edge] = set()
        for u, v in edges:
            e = _norm(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitsets (bit ``v`` set in row ``u`` iff uv is an edge)."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return all(d is not UNREACHABLE for d in self.distances.d[0])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.sorted_edges)})"


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[Optional[int], ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> Optional[int]:
        u, v = uv
        return self.d[u][v]

    def row(self, u: int) -> tuple[Optional[int], ...]:
        return self.d[u]

    def as_lists(self) -> list[list[int]]:
        """Rows with the unreachable marker replaced by -1 (kernel representation)."""
        return [[-1 if x is UNREACHABLE else x for x in r] for r in self.d]


# ---------------------------------------------------------------------------
# construction and edit


def add_edges(G: Graph, E: Iterable[Sequence[int]]) -> Graph:
    """Return ``G + E``. Every pair in ``E`` must be a non-edge of ``G``."""
    new = set(G.edges)
    for pair in E:
        u, v = pair
        if u == v:
            raise GraphError(f"cannot add self-loop at {u}")
        if not (0 <= u < G.n and 0 <= v < G.n):
            raise GraphError(f"pair {tuple(pair)} has an endpoint outside 0..{G.n - 1}")
        e = _norm(u, v)
        if e in new:
            raise GraphError(f"{e} is already an edge")
        new.add(e)
    return Graph(G.n, frozenset(new))


def complement_edges(G: Graph) -> list[Edge]:
    return [
        (u, v)
        for u in range(G.n)
        for v in range(u + 1, G.n)
        if (u, v) not in G.edges
    ]


# ---------------------------------------------------------------------------
# distances


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    raw = kernels.apsp(G.n, list(G.masks))
    d = tuple(tuple(UNREACHABLE if x < 0 else x for x in row) for row in raw)
    return DistanceMatrix(G.n, d)


def require_connected(G: Graph) -> None:
    if not G.is_connected():
        raise DisconnectedGraphError("graph is disconnected")


def diameter(G: Graph) -> int:
    require_connected(G)
    if G.n == 0:
        raise GraphError("empty graph has no diameter")
    return max(max(row) for row in G.distances.d)


def k_neighbourhood(G: Graph, v: int, k: int) -> frozenset[int]:
    """Vertices at distance exactly ``k`` from ``v``."""
    if not 0 <= v < G.n:
        raise GraphError(f"invalid vertex {v}")
    if k < 0:
        raise GraphError("k must be nonnegative")
    return frozenset(x for x, d in enumerate(G.distances.d[v]) if d == k)


# ---------------------------------------------------------------------------
# edge-list format


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty input")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"bad header line {lines[0]!r}, expected 'n m'") from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1} lines")
    seen: set[Edge] = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        e = _norm(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph(n, frozenset(seen))


def write_edge_list(G: Graph) -> str:
    out = [f"{G.n} {G.m}"]
    out.extend(f"{u} {v}" for u, v in G.sorted_edges)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# graph6 format
#
# Vertex count N(n), then the upper triangle of the adjacency matrix in
# column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each
# byte offset by 63.


_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(G: Graph) -> str:
    bits = [
        1 if (i, j) in G.edges else 0
        for j in range(1, G.n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2))
        for i in range(0, len(bits), 6)
    )
    return _g6_size(G.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    vals = []
    for pos, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r} at position {pos}")
        vals.append(o - 63)
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            width = 6
            head = vals[2:8]
            rest = vals[8:]
        else:
            width = 3
            head = vals[1:4]
            rest = vals[4:]
        if len(head) < width:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for x in head:
            n = (n << 6) | x
    else:
        n = vals[0]
        rest = vals[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(rest) < need:
        raise GraphFormatError(f"truncated graph6 bit stream: need {need} bytes, got {len(rest)}")
    if len(rest) > need:
        raise GraphFormatError(f"trailing data after graph6 bit stream ({len(rest) - need} extra bytes)")
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.add((i, j))
            k += 1
    return Graph(n, frozenset(edges))
