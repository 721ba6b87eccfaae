"""Edge additions that lower the metric dimension of trees.

``reduce_once`` adds one edge to a tree of dimension ``b >= 3`` and returns a
resolving set of size ``b - 1``. ``reduce_dim4_to_2`` adds two edges to a
tree of dimension 4 and returns a resolving set of size 2. Each follows a
case split on terminal degrees and on the shape of the core. Where the
construction leaves a choice open, we take the lowest vertex id, and
distances are broken by id. Every plan is verified before it is returned.

Notation below: ``lim(x)`` lists the anchor-neighbours of the limbs at
``x`` in id order, and ``x_j`` is its ``j``-th entry (1-based).
"""

from __future__ import annotations

from .graph import Edge, Graph, GraphError, add_edges
from .metric import metric_dimension_exact
from .threshold import EdgeAdditionPlan, make_plan
from .trees import TreeAnatomy, require_tree, tree_basis_with, tree_metric_dimension


def _lim(A: TreeAnatomy, x: int) -> list[int]:
    return [L.neighbour for L in A.limbs_at(x)]


def _plan(T: Graph, edges: list[Edge], W, case: str) -> tuple[EdgeAdditionPlan, str]:
    try:
        return make_plan(T, edges, W), case
    except AssertionError as exc:
        raise AssertionError(f"case {case}: {exc}") from None


def _reduce_once(T: Graph) -> tuple[EdgeAdditionPlan, str]:
    require_tree(T)
    b = tree_metric_dimension(T)
    if b < 3:
        raise GraphError(f"reduce_once needs metric dimension >= 3, tree has {b}")
    A = TreeAnatomy.of(T)
    d = T.distances.d

    big = [v for v in A.exterior_majors if A.ter(v) >= 3]
    if big:
        v = big[0]
        v1, v2 = _lim(A, v)[:2]
        W = set(tree_basis_with(T, {v1, v2}))
        return _plan(T, [(v1, v2)], W - {v1}, "1")

    # every exterior major has ter <= 2; pick v and two core leaves v1, v2
    if A.core_is_path():
        v1, v2 = A.core_leaves()
        v = min(set(A.core_vertices) - {v1, v2})
    else:
        CA = A.core()
        cc = CA.core_adj
        v = min(CA.core_leaves()) if len(cc) > 1 else next(iter(cc))
        l1, l2 = CA.limbs_at(v)[:2]
        v1, v2 = l1.leaf, l2.leaf

    inner = A.path(v1, v2)[1:-1]
    if not any(A.ter(x) == 2 for x in inner):
        p1, p2 = _lim(A, v1)[0], _lim(A, v2)[0]
        if d[v][p1] > d[v][p2]:
            p1, p2 = p2, p1
        z = A.path(v, p2)[d[v][p1]]
        W = set(tree_basis_with(T, {p1, p2}))
        return _plan(T, [(p1, z)], W - {p1}, "2.1")

    # first terminal-degree-2 vertex walking from v2 towards v, else from v1
    w = next((x for x in A.path(v2, v)[1:] if A.ter(x) == 2), None)
    if w is None:
        v1, v2 = v2, v1
        w = next(x for x in A.path(v2, v)[1:] if A.ter(x) == 2)
    wp = _lim(A, w)[0]
    p2 = _lim(A, v2)[0]
    toward = A.path(w, v2)[1]
    W = set(tree_basis_with(T, {wp, p2}))
    return _plan(T, [(wp, toward)], W - {wp}, "2.2")


def reduce_once(T: Graph) -> EdgeAdditionPlan:
    """One edge whose addition drops the dimension of ``T`` by one, with the smaller basis."""
    return _reduce_once(T)[0]


def reduce_once_case(T: Graph) -> str:
    """Which branch of the construction ``reduce_once`` takes on ``T``."""
    return _reduce_once(T)[1]


def _by_dist(d, origin: int, xs) -> list[int]:
    return sorted(xs, key=lambda x: (d[origin][x], x))


def _reduce_dim4(T: Graph) -> tuple[EdgeAdditionPlan, str]:
    require_tree(T)
    b = tree_metric_dimension(T)
    if b != 4:
        raise GraphError(f"reduce_dim4_to_2 needs metric dimension 4, tree has {b}")
    A = TreeAnatomy.of(T)
    d = T.distances.d
    P = [v for v in A.exterior_majors if A.ter(v) >= 2]
    lim = {x: _lim(A, x) for x in P}

    if len(P) == 1:
        (v,) = P
        n1, n2, n3, n4 = lim[v][:4]
        return _plan(T, [(n1, n2), (n3, n4)], {n1, n4}, "1")

    if len(P) == 2:
        v1, v2 = sorted(P, key=lambda x: (-A.ter(x), x))
        a, c = lim[v1], lim[v2]
        if A.ter(v1) == 4:
            w = A.path(v1, v2)[1]
            return _plan(T, [(a[0], a[1]), (a[3], w)], {a[0], c[0]}, "2.1")
        return _plan(T, [(a[0], a[1]), (c[0], c[1])], {a[0], c[0]}, "2.2")

    S = A.core_adj
    leaves = A.core_leaves()

    if len(P) == 3:
        if len(leaves) == 3:
            v = next(x for x in S if len(S[x]) == 3)
            v3 = next(x for x in P if A.ter(x) == 3)
            v1, v2 = _by_dist(d, v, [x for x in P if x != v3])
            w = A.path(v, lim[v2][0])[d[v][v1] + 1]
            e = [(lim[v3][0], lim[v3][1]), (lim[v1][0], w)]
            return _plan(T, e, {lim[v2][0], lim[v3][0]}, "3.1")
        v1, v2 = sorted(leaves, key=lambda x: (-A.ter(x), x))
        v3 = next(x for x in P if x not in (v1, v2))
        if A.ter(v3) == 2:
            w = A.path(v3, v1)[1]
            e = [(lim[v1][0], lim[v1][1]), (lim[v3][0], w)]
            return _plan(T, e, {lim[v1][0], lim[v2][0]}, "3.2.1")
        if d[v1][v3] > d[v2][v3]:
            v1, v2 = v2, v1
        w = A.path(v3, lim[v2][0])[d[v1][v3] + 1]
        e = [(lim[v1][0], w), (lim[v3][0], lim[v3][1])]
        return _plan(T, e, {lim[v2][0], lim[v3][0]}, "3.2.2")

    # four vertices, each of terminal degree 2
    if len(leaves) == 2:
        v1 = min(leaves)
        v4 = max(leaves)
        v2, v3 = _by_dist(d, v1, [x for x in P if x not in leaves])
        w = A.path(v2, v1)[1]
        z = A.path(v3, v4)[1]
        e = [(lim[v2][0], w), (lim[v3][0], z)]
        return _plan(T, e, {lim[v1][0], lim[v4][0]}, "4.1")

    if len(leaves) == 3:
        v = next(x for x in S if len(S[x]) == 3)
        (v2,) = [x for x in P if x not in leaves]
        if v2 == v:
            v1 = min(leaves)
        else:
            v1 = next(x for x in leaves if v2 in A.path(v, x))
        v3, v4 = _by_dist(d, v, [x for x in leaves if x != v1])
        w = A.path(v2, v1)[1]
        z = A.path(v, lim[v4][0])[d[v][v3] + 1]
        e = [(lim[v2][0], w), (lim[v3][0], z)]
        return _plan(T, e, {lim[v1][0], lim[v4][0]}, "4.2")

    majors = sorted(x for x in S if len(S[x]) >= 3)
    if len(majors) == 2:
        u, v = majors
        at_u = [x for x in leaves if d[u][x] < d[v][x]]
        at_v = [x for x in leaves if x not in at_u]
        v2, v1 = _by_dist(d, u, at_u)
        v3, v4 = _by_dist(d, v, at_v)
        case = "4.3.1"
    else:
        (u,) = majors
        v = u
        v2, v1 = _by_dist(d, u, leaves[:2])
        v3, v4 = _by_dist(d, v, leaves[2:])
        case = "4.3.2"
    w = A.path(u, lim[v1][0])[d[u][v2] + 1]
    z = A.path(v, lim[v4][0])[d[v][v3] + 1]
    e = [(lim[v2][0], w), (lim[v3][0], z)]
    return _plan(T, e, {lim[v1][0], lim[v4][0]}, case)


def reduce_dim4_to_2(T: Graph) -> EdgeAdditionPlan:
    """Two edges taking a dimension-4 tree to dimension 2, with a size-2 basis."""
    return _reduce_dim4(T)[0]


def reduce_dim4_case(T: Graph) -> str:
    return _reduce_dim4(T)[1]


def chartrand_edge_bounds_check(T: Graph, e: Edge) -> bool:
    """Whether ``beta(T) - 2 <= beta(T + e) <= beta(T) + 1`` for this tree and non-edge."""
    require_tree(T)
    if T.n < 3:
        raise GraphError("needs a tree of order at least 3")
    u, v = e
    if T.has_edge(u, v) or u == v:
        raise GraphError(f"{tuple(e)} is not a non-edge of the tree")
    before = tree_metric_dimension(T)
    after = metric_dimension_exact(add_edges(T, [e])).beta
    return before - 2 <= after <= before + 1
