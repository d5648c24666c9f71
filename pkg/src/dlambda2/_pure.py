"""Pure-Python implementations of the hot kernels.

Every function here has a twin in ``_kernels.pyx`` with the same signature
and the same output. Graphs are passed as ``(n, adj)`` where ``adj[v]`` is
the neighbour bitset of vertex ``v``.
"""

from itertools import permutations, product

import numpy as np


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def is_connected(n, adj):
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def distance_rows(n, adj):
    """All-pairs hop distances, or None when the graph is disconnected."""
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        row = [0] * n
        seen = frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in _bits(frontier):
                row[v] = d
        if seen != full:
            return None
        rows.append(tuple(row))
    return tuple(rows)


def charpoly_int(n, rows):
    """Faddeev-LeVerrier over Python ints; coefficients of det(xI - A), ascending.

    Never overflows, so unlike the compiled twin it never returns None.
    """
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    a = [list(r) for r in rows]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # m <- a @ m + c_{n-k+1} I
        c_prev = coeffs[n - k + 1]
        new = []
        for i in range(n):
            ai = a[i]
            row = [0] * n
            for t in range(n):
                x = ai[t]
                if x:
                    mt = m[t]
                    for j in range(n):
                        row[j] += x * mt[j]
            row[i] += c_prev
            new.append(row)
        m = new
        tr = 0
        for i in range(n):
            ai = a[i]
            for t in range(n):
                tr += ai[t] * m[t][i]
        q, r = divmod(-tr, k)
        assert r == 0
        coeffs[n - k] = q
    return tuple(coeffs)


def distance_charpoly(n, adj):
    rows = distance_rows(n, adj)
    if rows is None:
        return None
    return charpoly_int(n, rows)


def _connectivity_order(pn, padj):
    order = []
    placed = 0
    deg = [bin(a).count("1") for a in padj]
    while len(order) < pn:
        best, key = -1, None
        for v in range(pn):
            if placed >> v & 1:
                continue
            k = (bin(padj[v] & placed).count("1"), deg[v], -v)
            if key is None or k > key:
                best, key = v, k
        order.append(best)
        placed |= 1 << best
    return order


def induced_embedding(pn, padj, hn, hadj):
    """First induced embedding of the pattern into the host, or None.

    Pattern vertices are placed in a fixed connectivity-first order and host
    candidates are tried in increasing index, so the answer is deterministic.
    Returns a tuple ``m`` with ``m[pattern_vertex] = host_vertex``.
    """
    if pn > hn:
        return None
    if pn == 0:
        return ()
    order = _connectivity_order(pn, padj)
    pdeg = [bin(a).count("1") for a in padj]
    hdeg = [bin(a).count("1") for a in hadj]
    hfull = (1 << hn) - 1
    image = [0] * pn

    def extend(depth, used):
        if depth == pn:
            return True
        v = order[depth]
        cand = hfull & ~used
        pv = padj[v]
        for i in range(depth):
            u = order[i]
            hu = image[u]
            if pv >> u & 1:
                cand &= hadj[hu]
            else:
                cand &= ~hadj[hu]
        need = pdeg[v]
        while cand:
            low = cand & -cand
            cand ^= low
            h = low.bit_length() - 1
            if hdeg[h] < need:
                continue
            image[v] = h
            if extend(depth + 1, used | low):
                return True
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def pair_code(n, adj, perm):
    """graph6-order bit string of the relabelled graph, most significant first.

    ``perm[new] = old``.
    """
    code = 0
    for j in range(1, n):
        aj = adj[perm[j]]
        for i in range(j):
            code = (code << 1) | (aj >> perm[i] & 1)
    return code


def canonical_code(n, adj):
    """Minimum pair code over all labelings that sort vertices by ascending degree.

    The restriction is isomorphism-invariant, so the minimum is a canonical form.
    Returns ``(code, perm)`` with ``perm[new] = old``.
    """
    deg = [bin(a).count("1") for a in adj]
    cells = {}
    for v in range(n):
        cells.setdefault(deg[v], []).append(v)
    groups = [cells[d] for d in sorted(cells)]
    best = None
    best_perm = None
    for parts in product(*(permutations(g) for g in groups)):
        perm = [v for part in parts for v in part]
        code = pair_code(n, adj, perm)
        if best is None or code < best:
            best, best_perm = code, perm
    return best, tuple(best_perm)


def connected_masks(n, lo, hi):
    """Edge masks in [lo, hi) (graph6 pair order, bit k = pair k) that are connected."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    out = []
    for mask in range(lo, hi):
        adj = [0] * n
        k = 0
        x = mask
        while x:
            low = x & -x
            k = low.bit_length() - 1
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            x ^= low
        if is_connected(n, adj):
            out.append(mask)
    return out


def jacobi_eigenvalues(n, flat, tol, max_sweeps=100):
    """Cyclic Jacobi on a symmetric matrix given row-major; eigenvalues descending."""
    a = np.array(flat, dtype=float).reshape(n, n)
    scale = max(1.0, float(np.sqrt((a * a).sum())))
    offmask = 1.0 - np.eye(n)
    for _ in range(max_sweeps):
        off = np.sqrt(((a * a) * offmask).sum())
        if off < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    vals = sorted(np.diag(a).tolist(), reverse=True)
    return vals


def peo_violation(n, adj):
    """MCS (ties to the smallest vertex) then the elimination check.

    Returns the first ``(v, x, y)`` with x, y earlier neighbours of v and xy
    a non-edge, or None when the visit order is a perfect elimination order.
    """
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in _bits(adj[best] & ~visited):
            weight[u] += 1
    seen = 0
    for v in order:
        e = adj[v] & seen
        seen |= 1 << v
        for x in _bits(e):
            rest = e & ~adj[x] & ~(1 << x)
            if rest:
                return v, x, (rest & -rest).bit_length() - 1
    return None
