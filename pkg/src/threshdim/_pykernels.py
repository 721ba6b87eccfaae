"""Pure-Python hot kernels.

This module is the reference the compiled ``_kernels`` extension mirrors
function for function; both must return identical results (including the
lexicographic tie-breaks), which the parity tests check.

Conventions shared with the extension:

* graphs arrive as adjacency bitmasks (``masks[u]`` has bit ``v`` set iff
  ``uv`` is an edge), distances as lists of int rows with ``-1`` meaning
  unreachable;
* grid points of ``{0..side-1}^k`` are indexed lexicographically, first
  coordinate most significant.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Optional

IMPLEMENTATION = "python"


def apsp(n: int, masks: list[int]) -> list[list[int]]:
    out = []
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
            while nxt:
                low = nxt & -nxt
                row[low.bit_length() - 1] = d
                nxt ^= low
        out.append(row)
    return out


def _max_distance(dist: list[list[int]]) -> int:
    return max(max(r) for r in dist) if dist else 0


def first_resolving_subset(n: int, dist: list[list[int]], k: int) -> Optional[tuple[int, ...]]:
    """Lexicographically first ``k``-subset whose distance vectors are all distinct.

    Depth-first over sorted tuples, refining the partition of ``V`` induced by
    the landmarks chosen so far. A branch is cut when some class is larger than
    ``base**r`` (each further landmark splits a class into at most ``base``
    parts), which never removes a solution, so the first hit is still the
    lexicographic minimum.
    """
    if n <= 1:
        return () if k >= 0 else None
    if k <= 0 or k > n:
        return None
    base = _max_distance(dist) + 1
    caps = [base**r for r in range(k + 1)]
    chosen: list[int] = []

    def rec(start: int, classes: list[int], r: int) -> bool:
        for w in range(start, n - r + 1):
            row = dist[w]
            key: dict[tuple[int, int], int] = {}
            new = [0] * n
            sizes: list[int] = []
            for x in range(n):
                t = (classes[x], row[x])
                c = key.get(t)
                if c is None:
                    c = key[t] = len(sizes)
                    sizes.append(0)
                sizes[c] += 1
                new[x] = c
            if len(sizes) == n:
                chosen.append(w)
                chosen.extend(range(w + 1, w + r))
                return True
            if r == 1 or max(sizes) > caps[r - 1]:
                continue
            chosen.append(w)
            if rec(w + 1, new, r - 1):
                return True
            chosen.pop()
        return False

    if rec(0, [0] * n, k):
        return tuple(chosen)
    return None


def min_resolving_subset(
    n: int, dist: list[list[int]], lo: int, hi: int
) -> Optional[tuple[int, tuple[int, ...]]]:
    """Smallest ``k`` in ``lo..hi`` with a resolving ``k``-subset, and that subset."""
    for k in range(max(lo, 0), hi + 1):
        W = first_resolving_subset(n, dist, k)
        if W is not None:
            return k, W
    return None


def _with_edges(masks: list[int], cand: list[tuple[int, int]], combo) -> list[int]:
    m = list(masks)
    for idx in combo:
        u, v = cand[idx]
        m[u] |= 1 << v
        m[v] |= 1 << u
    return m


def sweep_supergraphs(
    n: int,
    masks: list[int],
    cand: list[tuple[int, int]],
    lo: int,
    short_circuit: bool,
) -> tuple[int, tuple[int, ...], tuple[int, ...], int]:
    """Minimum metric dimension over ``G + E`` for all ``E`` within ``cand``.

    Subsets are visited by size, then lexicographically; a supergraph only
    replaces the incumbent when strictly better, so the witness is the
    fewest-edges, lexicographically-first optimum. With ``short_circuit`` the
    sweep stops as soon as the incumbent reaches ``lo``. Without it ``lo`` is
    ignored and every supergraph is solved, so the answer does not lean on
    the bound.

    Returns ``(best, witness_edge_indices, witness_basis, examined)``.
    """
    dist = apsp(n, masks)
    best, basis = min_resolving_subset(n, dist, 0, n)
    witness: tuple[int, ...] = ()
    examined = 1
    if short_circuit and best <= lo:
        return best, witness, basis, examined
    floor = lo if short_circuit else 1
    m = len(cand)
    for size in range(1, m + 1):
        for combo in combinations(range(m), size):
            examined += 1
            dist = apsp(n, _with_edges(masks, cand, combo))
            hit = min_resolving_subset(n, dist, floor, best - 1)
            if hit is not None:
                best, basis = hit
                witness = combo
                if short_circuit and best <= lo:
                    return best, witness, basis, examined
    return best, witness, basis, examined


def resolvable_landmark_sets(
    n: int, masks: list[int], cand: list[tuple[int, int]], kmax: int
) -> set[tuple[int, ...]]:
    """All sorted landmark tuples of size ``1..kmax`` resolving some ``G + E``."""
    pending = [W for k in range(1, kmax + 1) for W in combinations(range(n), k)]
    found: set[tuple[int, ...]] = set()
    m = len(cand)
    for size in range(m + 1):
        for combo in combinations(range(m), size):
            if not pending:
                return found
            dist = apsp(n, _with_edges(masks, cand, combo))
            still = []
            for W in pending:
                if len({tuple(dist[w][x] for w in W) for x in range(n)}) == n:
                    found.add(W)
                else:
                    still.append(W)
            pending = still
    return found


# ---------------------------------------------------------------------------
# W-resolved embedding search


def embedding_search(
    n: int,
    dist: list[list[int]],
    W: list[int],
    side: int,
    rank: list[int],
) -> tuple[Optional[list[tuple[int, ...]]], int]:
    """Backtracking search for a W-resolved embedding in the ``side^k`` grid.

    ``rank`` is the static tie-break order for variable selection (lower
    first). Returns ``(coords or None, nodes_visited)``.

    Constraints, all implied by ``coords[x][i] == d_H(w_i, x)`` for the
    supergraph ``H`` induced by the image:

    * unary: ``coords[w_i][i] == 0``; otherwise ``1 <= coords[x][i] <= d_G(w_i, x)``;
    * pairwise: distinct points, ``cheb(p, q) <= d_G(x, y)``; if ``x`` is
      ``w_i`` then ``cheb(p, q) <= coords[y][i]``; two landmarks agree on
      their mutual distance;
    * support: a point with ``coords[x][i] = t >= 1`` needs an occupied (or
      still possible) Chebyshev neighbour with ``i``-th coordinate ``t - 1``.

    At a complete assignment the support condition is exactly the
    W-resolved property.
    """
    k = len(W)
    P = side**k
    pts = list(product(range(side), repeat=k))
    lm_index = {w: i for i, w in enumerate(W)}

    # support neighbours: sup[p][i] = points q with cheb(p,q)=1 and q_i = p_i - 1
    offsets = [o for o in product((-1, 0, 1), repeat=k) if any(o)]
    sup: list[list[list[int]]] = []
    for p in pts:
        per = []
        for i in range(k):
            lst = []
            if p[i] >= 1:
                for o in offsets:
                    if o[i] != -1:
                        continue
                    q = tuple(a + b for a, b in zip(p, o))
                    if all(0 <= c < side for c in q):
                        lst.append(_index(q, side))
            per.append(lst)
        sup.append(per)

    dom: list[set[int]] = []
    for x in range(n):
        ok = set()
        for pi, p in enumerate(pts):
            good = True
            for i, w in enumerate(W):
                if x == w:
                    if p[i] != 0:
                        good = False
                        break
                elif not 1 <= p[i] <= dist[w][x]:
                    good = False
                    break
            if good:
                ok.add(pi)
        dom.append(ok)

    cnt = [0] * P
    for x in range(n):
        for pi in dom[x]:
            cnt[pi] += 1
    occ = [-1] * P
    where = [-1] * n
    nodes = 0

    def cheb(a: int, b: int) -> int:
        pa, pb = pts[a], pts[b]
        return max(abs(u - v) for u, v in zip(pa, pb)) if k else 0

    def support_ok() -> bool:
        for z in range(n):
            pz = where[z]
            if pz < 0:
                continue
            for i in range(k):
                lst = sup[pz][i]
                if pts[pz][i] >= 1 and not any(occ[q] >= 0 or cnt[q] > 0 for q in lst):
                    return False
        return True

    def assign(x: int, p: int, trail: list[tuple[int, int]]) -> bool:
        for q in dom[x]:
            cnt[q] -= 1
        trail.append((x, -1))  # marker: restore dom[x] wholesale
        saved_dom_x[x] = dom[x]
        dom[x] = {p}
        where[x] = p
        occ[p] = x
        px = pts[p]
        ix = lm_index.get(x)
        for y in range(n):
            if where[y] >= 0:
                continue
            iy = lm_index.get(y)
            dxy = dist[x][y]
            bad = []
            for q in dom[y]:
                c = cheb(p, q)
                if q == p or c > dxy:
                    bad.append(q)
                elif ix is not None and c > pts[q][ix]:
                    bad.append(q)
                elif iy is not None and (c > px[iy] or (ix is not None and pts[q][ix] != px[iy])):
                    bad.append(q)
            for q in bad:
                dom[y].discard(q)
                cnt[q] -= 1
                trail.append((y, q))
            if not dom[y]:
                return False
        return support_ok()

    saved_dom_x: dict[int, set[int]] = {}

    def undo(x: int, p: int, trail: list[tuple[int, int]]) -> None:
        while trail:
            y, q = trail.pop()
            if q == -1:
                dom[y] = saved_dom_x.pop(y)
                for r in dom[y]:
                    cnt[r] += 1
            else:
                dom[y].add(q)
                cnt[q] += 1
        where[x] = -1
        occ[p] = -1

    def pick() -> int:
        # landmarks first in W order, then smallest domain, ties by rank
        for w in W:
            if where[w] < 0:
                return w
        best = -1
        for x in range(n):
            if where[x] >= 0:
                continue
            if (
                best < 0
                or len(dom[x]) < len(dom[best])
                or (len(dom[x]) == len(dom[best]) and rank[x] < rank[best])
            ):
                best = x
        return best

    def rec(depth: int) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        x = pick()
        for p in sorted(dom[x]):
            nodes += 1
            trail: list[tuple[int, int]] = []
            if assign(x, p, trail) and rec(depth + 1):
                return True
            undo(x, p, trail)
        return False

    if any(not d for d in dom):
        return None, 0
    if rec(0):
        return [pts[where[x]] for x in range(n)], nodes
    return None, nodes


def _index(q: tuple[int, ...], side: int) -> int:
    idx = 0
    for c in q:
        idx = idx * side + c
    return idx
