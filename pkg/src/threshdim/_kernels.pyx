# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pykernels`` exactly (see its docstrings)."""

from itertools import combinations

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

IMPLEMENTATION = "cython"

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


# ---------------------------------------------------------------------------
# breadth-first distances on bitmask adjacency

cdef void _apsp(int n, const uint64_t* masks, int* dist) noexcept nogil:
    cdef int s, x, d
    cdef uint64_t seen, frontier, nxt, f
    cdef int* row
    for s in range(n):
        row = dist + s * n
        for x in range(n):
            row[x] = -1
        row[s] = 0
        seen = (<uint64_t>1) << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                nxt |= masks[__builtin_ctzll(f)]
                f &= f - 1
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
            while nxt:
                row[__builtin_ctzll(nxt)] = d
                nxt &= nxt - 1


cdef uint64_t* _masks_from(list masks, int n) except NULL:
    cdef uint64_t* out = <uint64_t*> malloc(max(n, 1) * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        out[i] = <uint64_t> masks[i]
    return out


cdef int* _dist_from(list dist, int n) except NULL:
    cdef int* out = <int*> malloc(max(n * n, 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef int i, j
    cdef list row
    for i in range(n):
        row = dist[i]
        for j in range(n):
            out[i * n + j] = row[j]
    return out


def apsp(int n, list masks):
    if n > 64:
        raise ValueError("bitmask kernels support at most 64 vertices")
    cdef uint64_t* m = _masks_from(masks, n)
    cdef int* d = <int*> malloc(max(n * n, 1) * sizeof(int))
    cdef int i, j
    try:
        _apsp(n, m, d)
        return [[d[i * n + j] for j in range(n)] for i in range(n)]
    finally:
        free(m)
        free(d)


# ---------------------------------------------------------------------------
# lexicographically first resolving subset by partition refinement

cdef struct RCtx:
    int n
    int base
    const int* dist
    int* classes      # (k + 1) rows of n
    int* tbl          # n * base slots, -1 when free
    int* touched
    int* sizes
    int* chosen
    long long* caps


cdef int _refine(RCtx* c, const int* cls, int w, int* out, int* maxsize) noexcept nogil:
    cdef int n = c.n
    cdef const int* row = c.dist + w * n
    cdef int ncls = 0, x, key, k, mx = 0
    for x in range(n):
        key = cls[x] * c.base + row[x]
        k = c.tbl[key]
        if k < 0:
            k = ncls
            c.tbl[key] = k
            c.touched[k] = key
            c.sizes[k] = 0
            ncls += 1
        c.sizes[k] += 1
        out[x] = k
    for k in range(ncls):
        c.tbl[c.touched[k]] = -1
        if c.sizes[k] > mx:
            mx = c.sizes[k]
    maxsize[0] = mx
    return ncls


cdef int _rec(RCtx* c, int start, int depth, int r) noexcept nogil:
    cdef int n = c.n
    cdef int w, j, ncls, mx
    cdef int* cls = c.classes + depth * n
    cdef int* new = c.classes + (depth + 1) * n
    for w in range(start, n - r + 1):
        ncls = _refine(c, cls, w, new, &mx)
        if ncls == n:
            c.chosen[depth] = w
            for j in range(1, r):
                c.chosen[depth + j] = w + j
            return 1
        if r == 1 or mx > c.caps[r - 1]:
            continue
        c.chosen[depth] = w
        if _rec(c, w + 1, depth + 1, r - 1):
            return 1
    return 0


cdef int _first_resolving(int n, const int* dist, int k, int* chosen) noexcept nogil:
    """1 and fills ``chosen[0..k)`` on success, 0 if none, -1 on allocation failure."""
    cdef int i, maxd = 0, found
    cdef RCtx c
    if n <= 1:
        return 1
    if k <= 0 or k > n:
        return 0
    for i in range(n * n):
        if dist[i] > maxd:
            maxd = dist[i]
    c.n = n
    c.base = maxd + 1
    c.dist = dist
    c.classes = <int*> calloc((k + 1) * n, sizeof(int))
    c.tbl = <int*> malloc(n * c.base * sizeof(int))
    c.touched = <int*> malloc(n * sizeof(int))
    c.sizes = <int*> malloc(n * sizeof(int))
    c.caps = <long long*> malloc((k + 1) * sizeof(long long))
    c.chosen = chosen
    if c.classes == NULL or c.tbl == NULL or c.touched == NULL or c.sizes == NULL or c.caps == NULL:
        found = -1
    else:
        for i in range(n * c.base):
            c.tbl[i] = -1
        c.caps[0] = 1
        for i in range(1, k + 1):
            # saturate: a cap of n or more never prunes
            c.caps[i] = c.caps[i - 1] * c.base if c.caps[i - 1] < n else n
        found = _rec(&c, 0, 0, k)
    free(c.classes)
    free(c.tbl)
    free(c.touched)
    free(c.sizes)
    free(c.caps)
    return found


cdef int _min_resolving(int n, const int* dist, int lo, int hi, int* chosen) noexcept nogil:
    cdef int k, r
    if lo < 0:
        lo = 0
    for k in range(lo, hi + 1):
        r = _first_resolving(n, dist, k, chosen)
        if r != 0:
            return k if r > 0 else -2
    return -1


def first_resolving_subset(int n, list dist, int k):
    if n <= 1:
        return () if k >= 0 else None
    cdef int* d = _dist_from(dist, n)
    cdef int* chosen = <int*> malloc(max(k, 1) * sizeof(int))
    cdef int r
    try:
        r = _first_resolving(n, d, k, chosen)
        if r < 0:
            raise MemoryError()
        if r == 0:
            return None
        return tuple([chosen[i] for i in range(k)])
    finally:
        free(d)
        free(chosen)


def min_resolving_subset(int n, list dist, int lo, int hi):
    cdef int k
    for k in range(max(lo, 0), hi + 1):
        W = first_resolving_subset(n, dist, k)
        if W is not None:
            return k, W
    return None


# ---------------------------------------------------------------------------
# supergraph sweeps

cdef inline int _next_combo(int* idx, int size, int m) noexcept nogil:
    """Advance ``idx`` to the next ``size``-combination of ``0..m-1``; 0 when exhausted."""
    cdef int i = size - 1
    while i >= 0 and idx[i] == m - size + i:
        i -= 1
    if i < 0:
        return 0
    idx[i] += 1
    i += 1
    while i < size:
        idx[i] = idx[i - 1] + 1
        i += 1
    return 1


cdef void _apply(int n, const uint64_t* base, uint64_t* out, const int* eu, const int* ev,
                 const int* idx, int size) noexcept nogil:
    cdef int i
    memcpy(out, base, n * sizeof(uint64_t))
    for i in range(size):
        out[eu[idx[i]]] |= (<uint64_t>1) << ev[idx[i]]
        out[ev[idx[i]]] |= (<uint64_t>1) << eu[idx[i]]


def sweep_supergraphs(int n, list masks, list cand, int lo, bint short_circuit):
    if n > 64:
        raise ValueError("bitmask kernels support at most 64 vertices")
    cdef int m = len(cand)
    cdef uint64_t* base = _masks_from(masks, n)
    cdef uint64_t* cur = <uint64_t*> malloc(max(n, 1) * sizeof(uint64_t))
    cdef int* d = <int*> malloc(max(n * n, 1) * sizeof(int))
    cdef int* chosen = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* basis = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* eu = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int* ev = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int* idx = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int* wit = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int i, size, best, k, floor, wsize = 0
    cdef long long examined = 1
    cdef bint stop = False
    try:
        for i in range(m):
            eu[i] = cand[i][0]
            ev[i] = cand[i][1]
        _apsp(n, base, d)
        best = _min_resolving(n, d, 0, n, basis)
        if best < 0:
            raise MemoryError()
        if short_circuit and best <= lo:
            stop = True
        floor = lo if short_circuit else 1
        size = 1
        while size <= m and not stop:
            for i in range(size):
                idx[i] = i
            while True:
                examined += 1
                _apply(n, base, cur, eu, ev, idx, size)
                _apsp(n, cur, d)
                k = _min_resolving(n, d, floor, best - 1, chosen)
                if k == -2:
                    raise MemoryError()
                if k >= 0:
                    best = k
                    memcpy(basis, chosen, k * sizeof(int))
                    memcpy(wit, idx, size * sizeof(int))
                    wsize = size
                    if short_circuit and best <= lo:
                        stop = True
                        break
                if not _next_combo(idx, size, m):
                    break
            size += 1
        return (
            best,
            tuple([wit[i] for i in range(wsize)]),
            tuple([basis[i] for i in range(best)]) if n > 1 else (),
            examined,
        )
    finally:
        free(base); free(cur); free(d); free(chosen); free(basis)
        free(eu); free(ev); free(idx); free(wit)


cdef bint _resolves(int n, const int* dist, int base, const int* W, int k,
                    int* cls, int* nxt, int* tbl, int* touched) noexcept nogil:
    cdef int i, x, key, c, ncls = 1
    cdef const int* row
    for x in range(n):
        cls[x] = 0
    for i in range(k):
        row = dist + W[i] * n
        ncls = 0
        for x in range(n):
            key = cls[x] * base + row[x]
            c = tbl[key]
            if c < 0:
                c = ncls
                tbl[key] = c
                touched[c] = key
                ncls += 1
            nxt[x] = c
        for c in range(ncls):
            tbl[touched[c]] = -1
        memcpy(cls, nxt, n * sizeof(int))
    return ncls == n


def resolvable_landmark_sets(int n, list masks, list cand, int kmax):
    if n > 64:
        raise ValueError("bitmask kernels support at most 64 vertices")
    pending = [W for k in range(1, kmax + 1) for W in combinations(range(n), k)]
    cdef int npend = len(pending)
    cdef int m = len(cand)
    cdef int stride = max(kmax, 1)
    cdef int* ws = <int*> malloc(max(npend, 1) * stride * sizeof(int))
    cdef int* wk = <int*> malloc(max(npend, 1) * sizeof(int))
    cdef char* done = <char*> calloc(max(npend, 1), 1)
    cdef uint64_t* base = _masks_from(masks, n)
    cdef uint64_t* cur = <uint64_t*> malloc(max(n, 1) * sizeof(uint64_t))
    cdef int* d = <int*> malloc(max(n * n, 1) * sizeof(int))
    cdef int* eu = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int* ev = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int* idx = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int* cls = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* nx = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* tbl = <int*> malloc(max(n * (n + 1), 1) * sizeof(int))
    cdef int* touched = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int i, j, size, left = npend, maxd
    try:
        for i in range(npend):
            W = pending[i]
            wk[i] = len(W)
            for j in range(wk[i]):
                ws[i * stride + j] = W[j]
        for i in range(m):
            eu[i] = cand[i][0]
            ev[i] = cand[i][1]
        for i in range(n * (n + 1)):
            tbl[i] = -1
        size = 0
        while size <= m and left > 0:
            for i in range(size):
                idx[i] = i
            while left > 0:
                _apply(n, base, cur, eu, ev, idx, size)
                _apsp(n, cur, d)
                maxd = 0
                for i in range(n * n):
                    if d[i] > maxd:
                        maxd = d[i]
                for i in range(npend):
                    if not done[i] and _resolves(n, d, maxd + 1, ws + i * stride, wk[i],
                                                 cls, nx, tbl, touched):
                        done[i] = 1
                        left -= 1
                if size == 0 or not _next_combo(idx, size, m):
                    break
            size += 1
        return {pending[i] for i in range(npend) if done[i]}
    finally:
        free(ws); free(wk); free(done); free(base); free(cur); free(d)
        free(eu); free(ev); free(idx); free(cls); free(nx); free(tbl); free(touched)


# ---------------------------------------------------------------------------
# W-resolved embedding search

cdef struct ECtx:
    int n
    int k
    int side
    int P
    const int* dist
    const int* W
    const int* lm        # landmark index per vertex, -1 otherwise
    const int* rank
    const int* pts       # P * k coordinates
    const int* sup_off   # (P * k + 1) offsets into sup
    const int* sup
    char* dom            # n * P
    int* domsize
    int* cnt
    int* occ
    int* where
    int* trail           # pairs (vertex, point)
    long long tlen
    long long nodes


cdef inline int _cheb(ECtx* c, int a, int b) noexcept nogil:
    cdef int i, t, m = 0
    cdef const int* pa = c.pts + a * c.k
    cdef const int* pb = c.pts + b * c.k
    for i in range(c.k):
        t = pa[i] - pb[i]
        if t < 0:
            t = -t
        if t > m:
            m = t
    return m


cdef bint _support_ok(ECtx* c) noexcept nogil:
    cdef int z, i, pz, j, q
    cdef bint ok
    for z in range(c.n):
        pz = c.where[z]
        if pz < 0:
            continue
        for i in range(c.k):
            if c.pts[pz * c.k + i] < 1:
                continue
            ok = False
            for j in range(c.sup_off[pz * c.k + i], c.sup_off[pz * c.k + i + 1]):
                q = c.sup[j]
                if c.occ[q] >= 0 or c.cnt[q] > 0:
                    ok = True
                    break
            if not ok:
                return False
    return True


cdef inline void _remove(ECtx* c, int y, int q) noexcept nogil:
    c.dom[y * c.P + q] = 0
    c.domsize[y] -= 1
    c.cnt[q] -= 1
    c.trail[2 * c.tlen] = y
    c.trail[2 * c.tlen + 1] = q
    c.tlen += 1


cdef bint _assign(ECtx* c, int x, int p) noexcept nogil:
    cdef int q, y, ix, iy, cq, dxy
    cdef char* dx = c.dom + x * c.P
    cdef char* dy
    for q in range(c.P):
        if dx[q] and q != p:
            _remove(c, x, q)
    c.cnt[p] -= 1
    c.where[x] = p
    c.occ[p] = x
    ix = c.lm[x]
    for y in range(c.n):
        if c.where[y] >= 0:
            continue
        iy = c.lm[y]
        dxy = c.dist[x * c.n + y]
        dy = c.dom + y * c.P
        for q in range(c.P):
            if not dy[q]:
                continue
            cq = _cheb(c, p, q)
            if q == p or cq > dxy:
                _remove(c, y, q)
            elif ix >= 0 and cq > c.pts[q * c.k + ix]:
                _remove(c, y, q)
            elif iy >= 0 and (cq > c.pts[p * c.k + iy]
                              or (ix >= 0 and c.pts[q * c.k + ix] != c.pts[p * c.k + iy])):
                _remove(c, y, q)
        if c.domsize[y] == 0:
            return False
    return _support_ok(c)


cdef void _undo(ECtx* c, int x, int p, long long mark) noexcept nogil:
    cdef int y, q
    while c.tlen > mark:
        c.tlen -= 1
        y = c.trail[2 * c.tlen]
        q = c.trail[2 * c.tlen + 1]
        c.dom[y * c.P + q] = 1
        c.domsize[y] += 1
        c.cnt[q] += 1
    c.cnt[p] += 1
    c.where[x] = -1
    c.occ[p] = -1


cdef int _pick(ECtx* c) noexcept nogil:
    cdef int i, x, best = -1
    for i in range(c.k):
        if c.where[c.W[i]] < 0:
            return c.W[i]
    for x in range(c.n):
        if c.where[x] >= 0:
            continue
        if (best < 0 or c.domsize[x] < c.domsize[best]
                or (c.domsize[x] == c.domsize[best] and c.rank[x] < c.rank[best])):
            best = x
    return best


cdef bint _search(ECtx* c, int depth) noexcept nogil:
    cdef int x, p
    cdef long long mark
    if depth == c.n:
        return True
    x = _pick(c)
    for p in range(c.P):
        if not c.dom[x * c.P + p]:
            continue
        c.nodes += 1
        mark = c.tlen
        if _assign(c, x, p) and _search(c, depth + 1):
            return True
        _undo(c, x, p, mark)
    return False


def embedding_search(int n, list dist, list W, int side, list rank):
    cdef int k = len(W)
    cdef long long Pll = 1
    cdef int i, j, x, p, q, t, w
    for i in range(k):
        Pll *= side
        if Pll > 50_000_000:
            raise ValueError("grid too large for embedding search")
    cdef int P = <int> Pll
    cdef ECtx c
    c.n = n
    c.k = k
    c.side = side
    c.P = P
    c.tlen = 0
    c.nodes = 0

    cdef int* cdist = _dist_from(dist, n)
    cdef int* cW = <int*> malloc(max(k, 1) * sizeof(int))
    cdef int* clm = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* crank = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* pts = <int*> malloc(max(P * k, 1) * sizeof(int))
    cdef int* sup_off = <int*> malloc((P * k + 1) * sizeof(int))
    cdef int* sup = NULL
    cdef char* dom = <char*> calloc(max(n * P, 1), 1)
    cdef int* domsize = <int*> calloc(max(n, 1), sizeof(int))
    cdef int* cnt = <int*> calloc(max(P, 1), sizeof(int))
    cdef int* occ = <int*> malloc(max(P, 1) * sizeof(int))
    cdef int* where = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* trail = <int*> malloc(max(2 * (<long long> n) * P, 2) * sizeof(int))
    cdef int* off = <int*> malloc(max(k, 1) * sizeof(int))
    cdef int noff, o, good, total
    cdef bint found

    try:
        if (cW == NULL or clm == NULL or crank == NULL or pts == NULL or sup_off == NULL
                or dom == NULL or domsize == NULL or cnt == NULL or occ == NULL
                or where == NULL or trail == NULL or off == NULL):
            raise MemoryError()
        for x in range(n):
            clm[x] = -1
            crank[x] = rank[x]
            where[x] = -1
        for i in range(k):
            cW[i] = W[i]
            clm[cW[i]] = i
        for p in range(P):
            occ[p] = -1
            t = p
            for i in range(k - 1, -1, -1):
                pts[p * k + i] = t % side
                t //= side

        # support lists: Chebyshev neighbours q of p with q_i = p_i - 1
        noff = 1
        for i in range(k):
            noff *= 3
        total = 0
        for p in range(P):
            for i in range(k):
                sup_off[p * k + i] = total
                if pts[p * k + i] < 1:
                    continue
                for o in range(noff):
                    t = o
                    good = 1
                    for j in range(k - 1, -1, -1):
                        off[j] = t % 3 - 1
                        t //= 3
                    if off[i] != -1:
                        continue
                    for j in range(k):
                        if not (0 <= pts[p * k + j] + off[j] < side):
                            good = 0
                            break
                    if good:
                        total += 1
        sup_off[P * k] = total
        sup = <int*> malloc(max(total, 1) * sizeof(int))
        if sup == NULL:
            raise MemoryError()
        total = 0
        for p in range(P):
            for i in range(k):
                if pts[p * k + i] < 1:
                    continue
                for o in range(noff):
                    t = o
                    good = 1
                    for j in range(k - 1, -1, -1):
                        off[j] = t % 3 - 1
                        t //= 3
                    if off[i] != -1:
                        continue
                    q = 0
                    for j in range(k):
                        if not (0 <= pts[p * k + j] + off[j] < side):
                            good = 0
                            break
                        q = q * side + pts[p * k + j] + off[j]
                    if good:
                        sup[total] = q
                        total += 1

        for x in range(n):
            for p in range(P):
                good = 1
                for i in range(k):
                    w = cW[i]
                    t = pts[p * k + i]
                    if x == w:
                        if t != 0:
                            good = 0
                            break
                    elif not (1 <= t <= cdist[w * n + x]):
                        good = 0
                        break
                if good:
                    dom[x * P + p] = 1
                    domsize[x] += 1
                    cnt[p] += 1
            if domsize[x] == 0:
                return None, 0

        c.dist = cdist
        c.W = cW
        c.lm = clm
        c.rank = crank
        c.pts = pts
        c.sup_off = sup_off
        c.sup = sup
        c.dom = dom
        c.domsize = domsize
        c.cnt = cnt
        c.occ = occ
        c.where = where
        c.trail = trail
        with nogil:
            found = _search(&c, 0)
        if not found:
            return None, c.nodes
        return [tuple([pts[where[x] * k + i] for i in range(k)]) for x in range(n)], c.nodes
    finally:
        free(cdist); free(cW); free(clm); free(crank); free(pts); free(sup_off); free(sup)
        free(dom); free(domsize); free(cnt); free(occ); free(where); free(trail); free(off)
