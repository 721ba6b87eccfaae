"""Tree anatomy, the closed-form metric dimension of trees, and tree corpora.

Vocabulary (for a tree that is not a path):

* a *major* vertex has degree at least 3;
* a leaf ``u`` is a *terminal* vertex of the major ``v`` when ``v`` is the
  major vertex nearest to ``u``; the walk from ``u`` through degree-2
  vertices reaches ``v`` first, so the nearest major is always unique;
* ``ter(v)`` counts the terminal vertices of ``v``; ``v`` is *exterior* when
  ``ter(v) >= 1``;
* a *limb* of ``v`` is the path from the neighbour of ``v`` to one of its
  terminal leaves, both inclusive;
* the *core* is what remains after deleting every limb;
* the *branches* at ``x`` are the components of ``T - x``, each with ``x``
  put back.

Anatomies can describe any tree on an arbitrary vertex set, which lets the
reduction code take the core of the core without relabelling.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional

from .graph import Graph, GraphError
from .metric import is_resolving


class NotATreeError(GraphError):
    pass


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and G.is_connected()


def is_path(G: Graph) -> bool:
    return is_tree(G) and all(len(a) <= 2 for a in G.adj)


def require_tree(G: Graph) -> None:
    if not is_tree(G):
        raise NotATreeError("input is not a tree")


@dataclass(frozen=True)
class Limb:
    anchor: int
    path: tuple[int, ...]  # anchor's neighbour first, leaf last

    @property
    def neighbour(self) -> int:
        return self.path[0]

    @property
    def leaf(self) -> int:
        return self.path[-1]

    def __len__(self) -> int:
        return len(self.path)


def _adjacency(T: Graph) -> dict[int, frozenset[int]]:
    return {v: T.adj[v] for v in range(T.n)}


def _is_path_adj(adj: Mapping[int, frozenset[int]]) -> bool:
    return all(len(a) <= 2 for a in adj.values())


class TreeAnatomy:
    """Majors, terminal degrees, limbs, core and branches of a non-path tree."""

    def __init__(self, adj: Mapping[int, Iterable[int]]):
        self.adj: dict[int, frozenset[int]] = {v: frozenset(a) for v, a in adj.items()}
        if _is_path_adj(self.adj):
            raise GraphError("paths have no major vertices; anatomy is undefined")
        deg = {v: len(a) for v, a in self.adj.items()}
        self.vertices: tuple[int, ...] = tuple(sorted(self.adj))
        self.majors: tuple[int, ...] = tuple(v for v in self.vertices if deg[v] >= 3)

        limbs: list[Limb] = []
        for leaf in self.vertices:
            if deg[leaf] != 1:
                continue
            walk = [leaf]
            prev, cur = None, leaf
            while True:
                nxt = next(u for u in self.adj[cur] if u != prev)
                if deg[nxt] >= 3:
                    break
                assert deg[nxt] == 2, "walk from a leaf hit another leaf in a non-path tree"
                walk.append(nxt)
                prev, cur = cur, nxt
            limbs.append(Limb(nxt, tuple(reversed(walk))))
        limbs.sort(key=lambda L: (L.anchor, L.neighbour))
        self.limbs: tuple[Limb, ...] = tuple(limbs)

        ter = dict.fromkeys(self.vertices, 0)
        for L in limbs:
            ter[L.anchor] += 1
        self.terminal_degree: dict[int, int] = ter
        self.exterior_majors: tuple[int, ...] = tuple(v for v in self.majors if ter[v] >= 1)
        on_limb = {x for L in limbs for x in L.path}
        self.core_vertices: frozenset[int] = frozenset(v for v in self.vertices if v not in on_limb)
        self._limb_of = {x: L for L in limbs for x in L.path}

    @classmethod
    def of(cls, T: Graph) -> TreeAnatomy:
        return cls(_adjacency(T))

    def ter(self, v: int) -> int:
        return self.terminal_degree[v]

    def limbs_at(self, v: int) -> tuple[Limb, ...]:
        return tuple(L for L in self.limbs if L.anchor == v)

    def limb_of(self, x: int) -> Optional[Limb]:
        return self._limb_of.get(x)

    @cached_property
    def core_adj(self) -> dict[int, frozenset[int]]:
        C = self.core_vertices
        return {v: frozenset(u for u in self.adj[v] if u in C) for v in C}

    def core_is_path(self) -> bool:
        return _is_path_adj(self.core_adj)

    def core(self) -> Optional[TreeAnatomy]:
        """Anatomy of the core, or ``None`` when the core is a path (or a single vertex)."""
        if self.core_is_path():
            return None
        return TreeAnatomy(self.core_adj)

    def core_leaves(self) -> tuple[int, ...]:
        ca = self.core_adj
        if len(ca) == 1:
            return tuple(ca)
        return tuple(v for v in sorted(ca) if len(ca[v]) == 1)

    def branches(self, x: int) -> list[frozenset[int]]:
        """Vertex sets of the branches at ``x``, ordered by their smallest non-``x`` vertex."""
        out = []
        for start in sorted(self.adj[x]):
            seen = {x, start}
            stack = [start]
            while stack:
                y = stack.pop()
                for z in self.adj[y]:
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
            out.append(frozenset(seen))
        out.sort(key=lambda B: min(B - {x}))
        return out

    def branch_containing(self, x: int, y: int) -> frozenset[int]:
        for B in self.branches(x):
            if y in B:
                return B
        raise GraphError(f"{y} is {x} itself")

    def path(self, a: int, b: int) -> list[int]:
        """The unique ``a``-``b`` path, both ends included."""
        parent = {a: a}
        stack = [a]
        while stack:
            y = stack.pop()
            if y == b:
                break
            for z in self.adj[y]:
                if z not in parent:
                    parent[z] = y
                    stack.append(z)
        out = [b]
        while out[-1] != a:
            out.append(parent[out[-1]])
        return out[::-1]

    def to_json(self) -> dict:
        return {
            "majors": list(self.majors),
            "terminal_degree": {str(v): t for v, t in self.terminal_degree.items() if t},
            "exterior_majors": list(self.exterior_majors),
            "limbs": [{"anchor": L.anchor, "path": list(L.path)} for L in self.limbs],
            "core": sorted(self.core_vertices),
        }


def tree_anatomy(T: Graph) -> TreeAnatomy:
    require_tree(T)
    if is_path(T):
        raise GraphError("anatomy is undefined for paths")
    return TreeAnatomy.of(T)


def tree_metric_dimension(T: Graph) -> int:
    """Sum of ``ter(v) - 1`` over exterior majors; 1 for paths, 0 for a single vertex."""
    require_tree(T)
    if T.n == 1:
        return 0
    if is_path(T):
        return 1
    A = TreeAnatomy.of(T)
    return sum(A.ter(v) - 1 for v in A.exterior_majors)


def tree_basis_with(T: Graph, required: Iterable[int] = ()) -> tuple[int, ...]:
    """A minimum resolving set of ``T`` containing ``required``.

    One vertex is taken from every limb but one at each exterior major.
    Required vertices claim their own limbs; the remaining quota goes to the
    anchor-neighbours of the lowest-id free limbs, so the highest-id unused
    limb is the one skipped.
    """
    require_tree(T)
    if is_path(T):
        raise GraphError("tree_basis_with expects a tree that is not a path")
    A = TreeAnatomy.of(T)
    req = sorted(set(required))
    claimed: dict[Limb, int] = {}
    for x in req:
        if not 0 <= x < T.n:
            raise GraphError(f"invalid vertex {x}")
        L = A.limb_of(x)
        if L is None:
            raise GraphError(f"required vertex {x} does not lie on a limb")
        if L in claimed:
            raise GraphError(f"required vertices {claimed[L]} and {x} share a limb")
        claimed[L] = x
    basis = []
    for v in A.exterior_majors:
        at = A.limbs_at(v)
        used = [L for L in at if L in claimed]
        quota = A.ter(v) - 1
        if len(used) > quota:
            raise GraphError(f"required set uses all {A.ter(v)} limbs of major {v}")
        basis.extend(claimed[L] for L in used)
        free = [L for L in at if L not in claimed]
        basis.extend(L.neighbour for L in free[: quota - len(used)])
    W = tuple(sorted(basis))
    if is_resolving(T, W) is None:
        raise AssertionError(f"constructed tree basis {W} does not resolve the tree")
    return W


# ---------------------------------------------------------------------------
# corpora


def free_trees(n: int) -> Iterator[Graph]:
    """Every free tree on ``n`` vertices exactly once, up to isomorphism.

    Level sequences in the Wright-Richmond-Odlyzko-McKay order: each rooted
    canonical sequence is accepted only when its root is a centre with the
    heavier subtree split off first, which picks one representative per
    unrooted tree. Constant amortised time per tree.
    """
    if n < 1:
        raise GraphError("trees need at least one vertex")
    if n == 1:
        yield Graph(1)
        return
    layout: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_tree(layout)
        if layout is None:
            break
        yield _layout_graph(layout)
        layout = _next_rooted(layout)


def _next_rooted(seq: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Split at the second child of the root: (first subtree rebased, rest)."""
    m = len(seq)
    ones = [i for i, x in enumerate(seq) if x == 1]
    if len(ones) >= 2:
        m = ones[1]
    left = [x - 1 for x in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _next_tree(seq: list[int]) -> Optional[list[int]]:
    while True:
        left, rest = _split(seq)
        lh, rh = max(left), max(rest)
        ok = rh >= lh
        if ok and rh == lh and (len(left) > len(rest) or (len(left) == len(rest) and left > rest)):
            ok = False
        if ok:
            return seq
        p = len(left)
        nxt = _next_rooted(seq, p)
        if nxt is None:
            return None
        if seq[p] > 2:
            new_left, _ = _split(nxt)
            tail = list(range(1, max(new_left) + 2))
            nxt[-len(tail):] = tail
        seq = nxt


def _layout_graph(seq: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, level in enumerate(seq):
        while stack and seq[stack[-1]] >= level:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(seq), edges)


def prufer_decode(seq: list[int], n: int) -> Graph:
    if n < 2 or len(seq) != n - 2:
        raise GraphError(f"a Prufer sequence for {n} vertices has length {n - 2}")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise GraphError(f"Prufer entry {x} out of range")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree on ``n`` vertices, deterministic in ``seed``."""
    if n < 2:
        raise GraphError("random_tree needs n >= 2")
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
