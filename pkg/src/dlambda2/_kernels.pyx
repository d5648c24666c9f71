# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Same signatures and outputs as ``_pure``."""

from libc.stdint cimport uint64_t, int64_t
from libc.math cimport sqrt, fabs
from libc.stdlib cimport malloc, free
from libc.limits cimport LLONG_MIN

cdef extern from *:
    """
    static inline int dl2_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int dl2_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int dl2_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int dl2_ctz(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int dl2_mul_ovf(long long a, long long b, long long *r) nogil
    int dl2_add_ovf(long long a, long long b, long long *r) nogil
    int dl2_popcount(unsigned long long x) nogil
    int dl2_ctz(unsigned long long x) nogil

DEF MAXN = 64


cdef inline uint64_t _full(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef int _load(int n, object adj, uint64_t *out) except -1:
    cdef int v
    if n < 0 or n > MAXN:
        raise ValueError("at most 64 vertices supported")
    for v in range(n):
        out[v] = <uint64_t>adj[v]
    return 0


cdef bint _connected(int n, uint64_t *a) noexcept nogil:
    cdef uint64_t seen = 1, frontier = 1, nxt, f
    cdef int v
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = dl2_ctz(f)
            f &= f - 1
            nxt |= a[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == _full(n)


def is_connected(int n, adj):
    cdef uint64_t a[MAXN]
    _load(n, adj, a)
    return _connected(n, a)


cdef bint _distances(int n, uint64_t *a, int *d) noexcept nogil:
    cdef uint64_t full = _full(n), seen, frontier, nxt, f
    cdef int s, v, dist
    for s in range(n):
        seen = (<uint64_t>1) << s
        frontier = seen
        d[s * n + s] = 0
        dist = 0
        while frontier:
            dist += 1
            nxt = 0
            f = frontier
            while f:
                v = dl2_ctz(f)
                f &= f - 1
                nxt |= a[v]
            frontier = nxt & ~seen
            seen |= frontier
            f = frontier
            while f:
                v = dl2_ctz(f)
                f &= f - 1
                d[s * n + v] = dist
        if seen != full:
            return False
    return True


def distance_rows(int n, adj):
    cdef uint64_t a[MAXN]
    cdef int d[MAXN * MAXN]
    cdef int i, j
    _load(n, adj, a)
    if not _distances(n, a, d):
        return None
    return tuple(tuple(d[i * n + j] for j in range(n)) for i in range(n))


cdef bint _charpoly(int n, long long *a, long long *coeffs) noexcept nogil:
    """Faddeev-LeVerrier in int64; returns False on any overflow."""
    cdef long long *m = <long long *>malloc(n * n * sizeof(long long))
    cdef long long *nm = <long long *>malloc(n * n * sizeof(long long))
    cdef long long acc, prod, tr, cprev
    cdef int i, j, t, k
    cdef bint ok = True
    if m == NULL or nm == NULL:
        free(m)
        free(nm)
        return False
    for i in range(n * n):
        m[i] = 0
    coeffs[n] = 1
    for k in range(1, n + 1):
        cprev = coeffs[n - k + 1]
        for i in range(n):
            for j in range(n):
                acc = 0
                for t in range(n):
                    if a[i * n + t] != 0 and m[t * n + j] != 0:
                        if dl2_mul_ovf(a[i * n + t], m[t * n + j], &prod) or dl2_add_ovf(acc, prod, &acc):
                            ok = False
                            break
                if not ok:
                    break
                if i == j and dl2_add_ovf(acc, cprev, &acc):
                    ok = False
                    break
                nm[i * n + j] = acc
            if not ok:
                break
        if not ok:
            break
        for i in range(n * n):
            m[i] = nm[i]
        tr = 0
        for i in range(n):
            for t in range(n):
                if a[i * n + t] != 0 and m[t * n + i] != 0:
                    if dl2_mul_ovf(a[i * n + t], m[t * n + i], &prod) or dl2_add_ovf(tr, prod, &tr):
                        ok = False
                        break
            if not ok:
                break
        if not ok:
            break
        if tr == LLONG_MIN:
            ok = False
            break
        coeffs[n - k] = (-tr) // k
    free(m)
    free(nm)
    return ok


def charpoly_int(int n, rows):
    """Integer characteristic polynomial, ascending; None if int64 would overflow."""
    cdef long long a[MAXN * MAXN]
    cdef long long c[MAXN + 1]
    cdef int i, j
    if n < 0 or n > MAXN:
        return None
    for i in range(n):
        r = rows[i]
        for j in range(n):
            a[i * n + j] = r[j]
    if not _charpoly(n, a, c):
        return None
    return tuple(c[i] for i in range(n + 1))


def distance_charpoly(int n, adj):
    """Characteristic polynomial of the distance matrix; None if disconnected.

    Raises OverflowError when int64 is insufficient (callers fall back).
    """
    cdef uint64_t a[MAXN]
    cdef int d[MAXN * MAXN]
    cdef long long m[MAXN * MAXN]
    cdef long long c[MAXN + 1]
    cdef int i
    _load(n, adj, a)
    if not _distances(n, a, d):
        return None
    for i in range(n * n):
        m[i] = d[i]
    if not _charpoly(n, m, c):
        raise OverflowError("int64 overflow in characteristic polynomial")
    return tuple(c[i] for i in range(n + 1))


cdef void _connectivity_order(int pn, uint64_t *padj, int *order) noexcept nogil:
    cdef uint64_t placed = 0
    cdef int filled, v, best, bc, bd, c, dg
    for filled in range(pn):
        best = -1
        bc = -1
        bd = -1
        for v in range(pn):
            if (placed >> v) & 1:
                continue
            c = dl2_popcount(padj[v] & placed)
            dg = dl2_popcount(padj[v])
            # ties keep the smallest index
            if c > bc or (c == bc and dg > bd):
                best = v
                bc = c
                bd = dg
        order[filled] = best
        placed |= (<uint64_t>1) << best


def induced_embedding(int pn, padj_in, int hn, hadj_in):
    cdef uint64_t padj[MAXN]
    cdef uint64_t hadj[MAXN]
    cdef int order[MAXN]
    cdef int image[MAXN]
    cdef int pdeg[MAXN]
    cdef int hdeg[MAXN]
    cdef uint64_t cand[MAXN + 1]
    cdef uint64_t used[MAXN + 1]
    cdef uint64_t hfull, c, low
    cdef int depth, i, u, v, h
    if pn > hn:
        return None
    if pn == 0:
        return ()
    _load(pn, padj_in, padj)
    _load(hn, hadj_in, hadj)
    for i in range(pn):
        pdeg[i] = dl2_popcount(padj[i])
    for i in range(hn):
        hdeg[i] = dl2_popcount(hadj[i])
    _connectivity_order(pn, padj, order)
    hfull = _full(hn)
    depth = 0
    used[0] = 0
    # candidate set for depth 0
    cand[0] = hfull
    while depth >= 0:
        c = cand[depth]
        v = order[depth]
        h = -1
        while c:
            low = c & (~c + 1)
            c ^= low
            i = dl2_ctz(low)
            if hdeg[i] >= pdeg[v]:
                h = i
                break
        cand[depth] = c
        if h < 0:
            depth -= 1
            continue
        image[v] = h
        used[depth + 1] = used[depth] | ((<uint64_t>1) << h)
        if depth + 1 == pn:
            return tuple(image[i] for i in range(pn))
        depth += 1
        v = order[depth]
        c = hfull & ~used[depth]
        for i in range(depth):
            u = order[i]
            if (padj[v] >> u) & 1:
                c &= hadj[image[u]]
            else:
                c &= ~hadj[image[u]]
        cand[depth] = c
    return None


cdef uint64_t _pair_code(int n, uint64_t *a, int *perm) noexcept nogil:
    cdef uint64_t code = 0, aj
    cdef int i, j
    for j in range(1, n):
        aj = a[perm[j]]
        for i in range(j):
            code = (code << 1) | ((aj >> perm[i]) & 1)
    return code


def pair_code(int n, adj, perm):
    cdef uint64_t a[MAXN]
    cdef int p[MAXN]
    cdef int i
    if n > 11:
        # more than 64 pair bits; use the exact Python route
        from . import _pure
        return _pure.pair_code(n, adj, perm)
    _load(n, adj, a)
    for i in range(n):
        p[i] = perm[i]
    return _pair_code(n, a, p)


cdef bint _next_perm(int *x, int lo, int hi) noexcept nogil:
    """Next lexicographic permutation of x[lo:hi]; False when wrapped around."""
    cdef int i = hi - 2, j, t
    while i >= lo and x[i] >= x[i + 1]:
        i -= 1
    if i < lo:
        # reverse to restore the first permutation
        j = hi - 1
        i = lo
        while i < j:
            t = x[i]; x[i] = x[j]; x[j] = t
            i += 1
            j -= 1
        return False
    j = hi - 1
    while x[j] <= x[i]:
        j -= 1
    t = x[i]; x[i] = x[j]; x[j] = t
    i += 1
    j = hi - 1
    while i < j:
        t = x[i]; x[i] = x[j]; x[j] = t
        i += 1
        j -= 1
    return True


def canonical_code(int n, adj):
    cdef uint64_t a[MAXN]
    cdef int perm[MAXN]
    cdef int best_perm[MAXN]
    cdef int starts[MAXN + 1]
    cdef int deg[MAXN]
    cdef int ncells = 0, i, d, k, cell
    cdef uint64_t code, best
    cdef bint first = True
    if n > 11:
        from . import _pure
        return _pure.canonical_code(n, adj)
    _load(n, adj, a)
    for i in range(n):
        deg[i] = dl2_popcount(a[i])
    k = 0
    for d in range(n):
        starts[ncells] = k
        for i in range(n):
            if deg[i] == d:
                perm[k] = i
                k += 1
        if k > starts[ncells]:
            ncells += 1
    starts[ncells] = n
    best = 0
    while True:
        code = _pair_code(n, a, perm)
        if first or code < best:
            best = code
            for i in range(n):
                best_perm[i] = perm[i]
            first = False
        # odometer over cells, last cell fastest
        cell = ncells - 1
        while cell >= 0 and not _next_perm(perm, starts[cell], starts[cell + 1]):
            cell -= 1
        if cell < 0:
            break
    return best, tuple(best_perm[i] for i in range(n))


def connected_masks(int n, unsigned long long lo, unsigned long long hi):
    cdef int pi[MAXN * MAXN]
    cdef int pj[MAXN * MAXN]
    cdef uint64_t a[MAXN]
    cdef unsigned long long mask, x
    cdef int i, j, k = 0, v
    if n < 1 or n > 11:
        raise ValueError("edge masks need 1 <= n <= 11")
    out = []
    for j in range(1, n):
        for i in range(j):
            pi[k] = i
            pj[k] = j
            k += 1
    mask = lo
    while mask < hi:
        for v in range(n):
            a[v] = 0
        x = mask
        while x:
            k = dl2_ctz(x)
            x &= x - 1
            a[pi[k]] |= (<uint64_t>1) << pj[k]
            a[pj[k]] |= (<uint64_t>1) << pi[k]
        if _connected(n, a):
            out.append(mask)
        mask += 1
    return out


def jacobi_eigenvalues(int n, flat, double tol, int max_sweeps=100):
    cdef double *a = <double *>malloc(n * n * sizeof(double))
    cdef double frob = 0.0, off, scale, apq, theta, t, c, s, x, y
    cdef int i, p, q, k, sweep
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(n * n):
            a[i] = flat[i]
            frob += a[i] * a[i]
        scale = sqrt(frob)
        if scale < 1.0:
            scale = 1.0
        for sweep in range(max_sweeps):
            off = 0.0
            for p in range(n):
                for q in range(n):
                    if p != q:
                        off += a[p * n + q] * a[p * n + q]
            if sqrt(off) < tol * scale:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p * n + q]
                    if fabs(apq) < 1e-300:
                        continue
                    theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    elif theta >= 0:
                        t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        x = a[k * n + p]
                        y = a[k * n + q]
                        a[k * n + p] = c * x - s * y
                        a[k * n + q] = s * x + c * y
                    for k in range(n):
                        x = a[p * n + k]
                        y = a[q * n + k]
                        a[p * n + k] = c * x - s * y
                        a[q * n + k] = s * x + c * y
        vals = sorted([a[i * n + i] for i in range(n)], reverse=True)
    finally:
        free(a)
    return vals


def peo_violation(int n, adj):
    """MCS (ties to the smallest vertex) then the elimination check.

    Returns the first ``(v, x, y)`` with x, y earlier neighbours of v and xy
    a non-edge, or None when the visit order is a perfect elimination order.
    """
    cdef uint64_t a[MAXN]
    cdef int order[MAXN]
    cdef int weight[MAXN]
    cdef uint64_t visited = 0, f, e, rest
    cdef int i, v, best, x
    _load(n, adj, a)
    for v in range(n):
        weight[v] = 0
    for i in range(n):
        best = -1
        for v in range(n):
            if not (visited >> v) & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order[i] = best
        visited |= (<uint64_t>1) << best
        f = a[best] & ~visited
        while f:
            weight[dl2_ctz(f)] += 1
            f &= f - 1
    visited = 0
    for i in range(n):
        v = order[i]
        e = a[v] & visited
        visited |= (<uint64_t>1) << v
        f = e
        while f:
            x = dl2_ctz(f)
            f &= f - 1
            rest = e & ~a[x] & ~((<uint64_t>1) << x)
            if rest:
                return v, x, dl2_ctz(rest)
    return None
