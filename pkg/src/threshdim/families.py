"""Named graph families and hand-placed embeddings of some of them.

Family specs have the string form ``tag:p1:p2`` with list parameters
comma-separated, e.g. ``t_k:5``, ``l3n:4``, ``subdivided_star:6:2,1,1,1,1,1``
or ``random_tree:8:42`` (the last parameter of ``random_tree`` is the seed).

Vertex numbering, which the packaged embeddings rely on:

* ``star:p`` is ``K_{1,p}`` with centre 0;
* ``l3n:n`` puts spine vertex ``k`` (1-based) at id ``3(k-1)`` and its two
  leaves right after it;
* ``subdivided_star:d:lengths`` has centre 0 and each leg as a block of
  consecutive ids starting next to the centre. A single length applies to
  every leg;
* ``t_k:k`` has centre 0, then five arms of ``k(k+1)/2`` vertices each,
  then the ``k``-vertex path. An arm is listed level by level. Level 1 is
  the centre's neighbour. Level ``j+1`` gives two children to the first
  vertex of level ``j`` and one child to every other vertex, in listing
  order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .embedding import LatticeEmbedding, w_resolved_diagnostic
from .graph import Graph, GraphError
from .threshold import EdgeAdditionPlan, make_plan
from .trees import random_tree as _random_tree

TAGS = (
    "path",
    "complete",
    "star",
    "complete_bipartite",
    "cycle",
    "l3n",
    "t_k",
    "subdivided_star",
    "figure4",
    "random_tree",
)


class FamilyError(GraphError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.tag not in TAGS:
            raise FamilyError(f"unknown family {self.tag!r}; known: {', '.join(TAGS)}")
        _check(self)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        tag, *fields = text.strip().split(":")
        try:
            groups = [[int(t) for t in f.split(",")] for f in fields]
        except ValueError:
            raise FamilyError(f"non-integer parameter in {text!r}") from None
        if tag == "random_tree":
            flat = [x for g in groups for x in g]
            if len(flat) not in (1, 2):
                raise FamilyError("random_tree takes n and an optional seed")
            return cls(tag, (flat[0],), flat[1] if len(flat) == 2 else 0)
        if tag == "subdivided_star":
            if len(groups) != 2 or len(groups[0]) != 1:
                raise FamilyError("subdivided_star takes a degree and a leg-length list")
            (deg,), lengths = groups
            if len(lengths) == 1:
                lengths = lengths * deg
            if len(lengths) != deg:
                raise FamilyError(f"{len(lengths)} leg lengths for degree {deg}")
            return cls(tag, (deg, *lengths))
        if any(len(g) != 1 for g in groups):
            raise FamilyError(f"{tag} takes scalar parameters")
        return cls(tag, tuple(g[0] for g in groups))

    def __str__(self) -> str:
        if self.tag == "subdivided_star":
            return f"subdivided_star:{self.params[0]}:{','.join(map(str, self.params[1:]))}"
        if self.tag == "random_tree":
            return f"random_tree:{self.params[0]}:{self.seed}"
        return ":".join([self.tag, *map(str, self.params)])


_ARITY = {
    "path": 1,
    "complete": 1,
    "star": 1,
    "complete_bipartite": 2,
    "cycle": 1,
    "l3n": 1,
    "t_k": 1,
    "figure4": 0,
    "random_tree": 1,
}
_MINIMUM = {"path": 1, "complete": 1, "star": 1, "cycle": 3, "l3n": 1, "t_k": 1, "random_tree": 2}


def _check(spec: FamilySpec) -> None:
    p = spec.params
    if spec.tag == "subdivided_star":
        if len(p) < 1 or p[0] < 3 or len(p) != p[0] + 1 or min(p[1:]) < 1:
            raise FamilyError("subdivided_star needs degree >= 3 and that many positive leg lengths")
        return
    if len(p) != _ARITY[spec.tag]:
        raise FamilyError(f"{spec.tag} takes {_ARITY[spec.tag]} parameter(s), got {len(p)}")
    if spec.tag == "complete_bipartite":
        if min(p) < 1:
            raise FamilyError("complete_bipartite parts must be nonempty")
    elif p and p[0] < _MINIMUM[spec.tag]:
        raise FamilyError(f"{spec.tag} needs parameter >= {_MINIMUM[spec.tag]}")
    if spec.seed is not None and spec.tag != "random_tree":
        raise FamilyError("only random_tree takes a seed")


def make(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    p = spec.params
    tag = spec.tag
    if tag == "path":
        return path(p[0])
    if tag == "complete":
        return complete(p[0])
    if tag == "star":
        return star(p[0])
    if tag == "complete_bipartite":
        return complete_bipartite(p[0], p[1])
    if tag == "cycle":
        return cycle(p[0])
    if tag == "l3n":
        return l3n(p[0])
    if tag == "t_k":
        return t_k(p[0])
    if tag == "subdivided_star":
        return subdivided_star(p[1:])
    if tag == "figure4":
        return figure4_graph()
    return _random_tree(p[0], spec.seed or 0)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(u, v) for u in range(s) for v in range(s, s + t)])


def l3n(n: int) -> Graph:
    edges = []
    for k in range(n):
        s = 3 * k
        edges += [(s, s + 1), (s, s + 2)]
        if k:
            edges.append((s - 3, s))
    return Graph.from_edges(3 * n, edges)


def subdivided_star(lengths) -> Graph:
    edges = []
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def t_k(k: int) -> Graph:
    if k < 1:
        raise FamilyError("t_k needs k >= 1")
    edges = []
    nxt = 1
    for _ in range(5):
        level = [nxt]
        edges.append((0, nxt))
        nxt += 1
        for _ in range(k - 1):
            new = []
            for i, x in enumerate(level):
                for _ in range(2 if i == 0 else 1):
                    edges.append((x, nxt))
                    new.append(nxt)
                    nxt += 1
            level = new
    prev = 0
    for _ in range(k):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    return Graph.from_edges(nxt, edges)


def figure4_graph() -> Graph:
    """``K_4`` on 0..3 with pendant 4 on vertex 2 and pendant 5 on vertex 3."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 5)])


def figure4_plan() -> tuple[Graph, EdgeAdditionPlan]:
    G = figure4_graph()
    return G, make_plan(G, [(0, 4), (0, 5)], (4, 5))


# ---------------------------------------------------------------------------
# embeddings


def _checked(G: Graph, emb: LatticeEmbedding, what: str) -> LatticeEmbedding:
    problem = w_resolved_diagnostic(G, emb)
    if problem is not None:
        raise AssertionError(f"{what} is not W-resolved: {problem}")
    return emb


def l3n_embedding(n: int) -> LatticeEmbedding:
    """Two-landmark embedding of ``L_{3n}``: spine ``k`` on the diagonal, leaves beside it."""
    if n < 2:
        raise FamilyError("l3n_embedding needs n >= 2")
    coords = []
    for k in range(1, n + 1):
        coords += [(k, k), (k - 1, k), (k, k - 1)]
    emb = LatticeEmbedding(2, n + 1, (1, 2), tuple(coords))
    return _checked(l3n(n), emb, f"l3n_embedding({n})")


def k16_subdivision_embedding(lengths) -> LatticeEmbedding:
    """Two-landmark embedding of the subdivision of ``K_{1,6}`` with these leg lengths.

    The first longest leg ``L`` (length ``b >= 2``) runs down to landmark
    ``w2`` and the lowest-numbered other leg (length ``a``) runs up to
    landmark ``w1``. With the centre at ``(a, b)`` they end at ``(0, a+b-1)``
    and ``(a+b-1, 0)``. The remaining four legs leave the centre through
    ``(a, b+1)``, ``(a+1, b+1)``, ``(a+1, b)`` and ``(a+1, b-1)``, then climb
    diagonally.
    """
    lengths = list(lengths)
    if len(lengths) != 6 or min(lengths) < 1 or max(lengths) < 2:
        raise FamilyError("need six positive leg lengths, at least one >= 2")
    G = subdivided_star(lengths)
    low = lengths.index(max(lengths))
    up = min(i for i in range(6) if i != low)
    a, b = lengths[up], lengths[low]
    starts = [sum(lengths[:i]) + 1 for i in range(6)]
    coords: dict[int, tuple[int, int]] = {0: (a, b)}
    for j in range(1, a + 1):
        coords[starts[up] + j - 1] = (a - j, b + j - 1)
    for j in range(1, b + 1):
        coords[starts[low] + j - 1] = (a + j - 1, b - j)
    firsts = [(a, b + 1), (a + 1, b + 1), (a + 1, b), (a + 1, b - 1)]
    rest = [i for i in range(6) if i not in (low, up)]
    for leg, (x, y) in zip(rest, firsts):
        for j in range(lengths[leg]):
            coords[starts[leg] + j] = (x + j, y + j)
    side = 1 + max(max(p) for p in coords.values())
    w1 = starts[up] + a - 1
    w2 = starts[low] + b - 1
    emb = LatticeEmbedding(2, side, (w1, w2), tuple(coords[v] for v in range(G.n)))
    return _checked(G, emb, f"k16_subdivision_embedding({lengths})")


def t5_embedding() -> LatticeEmbedding:
    """The packaged two-landmark embedding of ``t_k:5`` in the 11 x 11 grid."""
    text = resources.files("threshdim").joinpath("data/t5_embedding.json").read_text("utf-8")
    emb = LatticeEmbedding.from_json(json.loads(text))
    return _checked(t_k(5), emb, "packaged t5 embedding")


def packaged_embedding(spec: FamilySpec | str) -> Optional[LatticeEmbedding]:
    """The hand-placed embedding for this family member, if there is one."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if spec.tag == "l3n" and spec.params[0] >= 2:
        return l3n_embedding(spec.params[0])
    if spec.tag == "t_k" and spec.params[0] == 5:
        return t5_embedding()
    if spec.tag == "subdivided_star" and spec.params[0] == 6 and max(spec.params[1:]) >= 2:
        return k16_subdivision_embedding(spec.params[1:])
    return None


def random_tree(n: int, seed: int) -> Graph:
    return _random_tree(n, seed)
