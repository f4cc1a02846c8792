# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the hot kernels in bordersub._kernels_py.

Same algorithms, same results; the integer CSP search and the balanced
multiset search run on C scalars, the echelon reduction on Python ints
(values are arbitrary-precision) with typed loop machinery.  Tests compare
the two backends directly.
"""

from libc.stdlib cimport free, malloc

from math import gcd

BACKEND_NAME = "compiled"

DEF MAXQ = 512  # per-frame propagation queue; constraints <= n^3 <= 216


def _normalize_row(list row):
    cdef Py_ssize_t i, ncols = len(row)
    g = 0
    for i in range(ncols):
        x = row[i]
        if x:
            g = gcd(g, x)
    if g == 0:
        return row
    lead = 0
    for i in range(ncols):
        if row[i]:
            lead = row[i]
            break
    if lead < 0:
        g = -g
    if g != 1:
        row = [x // g for x in row]
    return row


def echelon_rows(rows):
    """Fraction-free integer row reduction; see the pure twin for the
    contract."""
    cdef dict pivots = {}
    cdef Py_ssize_t ncols = len(rows[0]) if rows else 0
    cdef Py_ssize_t c, j
    cdef list row, piv, new
    for src in rows:
        row = list(src)
        c = 0
        while c < ncols:
            x = row[c]
            if x == 0:
                c += 1
                continue
            piv = <list> pivots.get(c)
            if piv is None:
                pivots[c] = _normalize_row(row)
                break
            a = piv[c]
            g = gcd(a, x)
            ma = a // g
            mb = x // g
            new = [None] * ncols
            for j in range(ncols):
                new[j] = ma * row[j] - mb * piv[j]
            row = _normalize_row(new)
            c += 1
    return pivots


# ---------------------------------------------------------------------------
# tight-grading CSP search
# ---------------------------------------------------------------------------

cdef struct TightCtx:
    int n
    int nv
    int m
    int bound
    int *val
    unsigned char *done
    unsigned char *constrained
    int *unknown
    int *ksum
    int *cons        # 3*m variable indices
    int *adj_start   # CSR over variables, length nv+1
    int *adj         # 3*m constraint indices
    int *trail
    int trail_len


cdef bint _group_ok(TightCtx *ctx, int v, int x):
    cdef int base = (v // ctx.n) * ctx.n
    cdef int u
    for u in range(base, base + ctx.n):
        if u != v and ctx.done[u] and ctx.val[u] == x:
            return False
    return True


cdef bint _assign(TightCtx *ctx, int v, int x, int *queue, int *qlen):
    cdef int idx, ci
    cdef bint ok = True
    if x < -ctx.bound or x > ctx.bound or not _group_ok(ctx, v, x):
        return False
    ctx.val[v] = x
    ctx.done[v] = 1
    ctx.trail[ctx.trail_len] = v
    ctx.trail_len += 1
    for idx in range(ctx.adj_start[v], ctx.adj_start[v + 1]):
        ci = ctx.adj[idx]
        ctx.unknown[ci] -= 1
        ctx.ksum[ci] += x
        if ctx.unknown[ci] == 0:
            if ctx.ksum[ci] != 0:
                ok = False
        elif ctx.unknown[ci] == 1:
            queue[qlen[0]] = ci
            qlen[0] += 1
    return ok


cdef void _undo_to(TightCtx *ctx, int mark):
    cdef int v, idx
    while ctx.trail_len > mark:
        ctx.trail_len -= 1
        v = ctx.trail[ctx.trail_len]
        ctx.done[v] = 0
        for idx in range(ctx.adj_start[v], ctx.adj_start[v + 1]):
            ctx.unknown[ctx.adj[idx]] += 1
            ctx.ksum[ctx.adj[idx]] -= ctx.val[v]


cdef int _next_value(int x):
    # 0, 1, -1, 2, -2, ...
    if x > 0:
        return -x
    elif x < 0:
        return -x + 1
    return 1


cdef bint _fill_free(TightCtx *ctx):
    cdef int v, x
    for v in range(ctx.nv):
        if ctx.done[v]:
            continue
        x = 0
        while x <= ctx.bound:
            if _group_ok(ctx, v, x):
                ctx.val[v] = x
                ctx.done[v] = 1
                ctx.trail[ctx.trail_len] = v
                ctx.trail_len += 1
                break
            x = _next_value(x)
        else:
            return False
    return True


cdef bint _solve(TightCtx *ctx, int *queue, int qlen):
    cdef int mark = ctx.trail_len
    cdef int qi = 0, ci, v, t, u, x, mark2
    cdef int sub[MAXQ]
    cdef int sublen
    while qi < qlen:
        ci = queue[qi]
        qi += 1
        if ctx.unknown[ci] != 1:
            continue
        v = -1
        for t in range(3):
            u = ctx.cons[3 * ci + t]
            if not ctx.done[u]:
                v = u
                break
        if not _assign(ctx, v, -ctx.ksum[ci], queue, &qlen):
            _undo_to(ctx, mark)
            return False
        if qlen > MAXQ - 4:  # pragma: no cover - m is far below MAXQ
            raise AssertionError("propagation queue overflow")
    for v in range(ctx.nv):
        if not ctx.constrained[v] or ctx.done[v]:
            continue
        x = 0
        while x <= ctx.bound:
            mark2 = ctx.trail_len
            sublen = 0
            if _assign(ctx, v, x, sub, &sublen):
                if _solve(ctx, sub, sublen):
                    return True
            _undo_to(ctx, mark2)
            x = _next_value(x)
        _undo_to(ctx, mark)
        return False
    if _fill_free(ctx):
        return True
    _undo_to(ctx, mark)
    return False


def tight_search(int n, triples, int bound):
    """Compiled twin of _kernels_py.tight_search; same contract."""
    cdef int nv = 3 * n
    cdef int m = len(triples)
    if m > MAXQ - 8:
        raise ValueError("too many constraints for the compiled searcher")
    cdef TightCtx ctx
    cdef int *buf = <int *> malloc(sizeof(int) * (nv + m + m + 3 * m + (nv + 1) + 3 * m + nv))
    cdef unsigned char *flags = <unsigned char *> malloc(nv + nv)
    if buf == NULL or flags == NULL:
        free(buf)
        free(flags)
        raise MemoryError()
    ctx.n = n
    ctx.nv = nv
    ctx.m = m
    ctx.bound = bound
    ctx.val = buf
    ctx.unknown = buf + nv
    ctx.ksum = ctx.unknown + m
    ctx.cons = ctx.ksum + m
    ctx.adj_start = ctx.cons + 3 * m
    ctx.adj = ctx.adj_start + (nv + 1)
    ctx.trail = ctx.adj + 3 * m
    ctx.done = flags
    ctx.constrained = flags + nv
    ctx.trail_len = 0

    cdef int ci, t, v
    cdef int q0[MAXQ]
    cdef int q0len = 0
    cdef int *fill = NULL
    try:
        for v in range(nv):
            ctx.val[v] = 0
            ctx.done[v] = 0
            ctx.constrained[v] = 0
        for ci in range(m):
            i, j, k = triples[ci]
            ctx.cons[3 * ci] = i - 1
            ctx.cons[3 * ci + 1] = n + j - 1
            ctx.cons[3 * ci + 2] = 2 * n + k - 1
            ctx.unknown[ci] = 3
            ctx.ksum[ci] = 0
        # CSR adjacency var -> constraints
        for v in range(nv + 1):
            ctx.adj_start[v] = 0
        for ci in range(m):
            for t in range(3):
                ctx.adj_start[ctx.cons[3 * ci + t] + 1] += 1
        for v in range(nv):
            ctx.adj_start[v + 1] += ctx.adj_start[v]
            ctx.constrained[v] = 0
        fill = <int *> malloc(sizeof(int) * nv)
        if fill == NULL:
            raise MemoryError()
        for v in range(nv):
            fill[v] = ctx.adj_start[v]
        for ci in range(m):
            for t in range(3):
                v = ctx.cons[3 * ci + t]
                ctx.adj[fill[v]] = ci
                fill[v] += 1
                ctx.constrained[v] = 1

        # gauge: tau_A(1) = tau_B(1) = 0
        if not _assign(&ctx, 0, 0, q0, &q0len):
            return None
        if not _assign(&ctx, n, 0, q0, &q0len):
            return None
        if not _solve(&ctx, q0, q0len):
            return None
        return [ctx.val[v] for v in range(nv)]
    finally:
        free(fill)
        free(buf)
        free(flags)


# ---------------------------------------------------------------------------
# balanced multiset existence
# ---------------------------------------------------------------------------

cdef struct BalCtx:
    int n
    int m
    int max_degree
    int *cnt        # 3 * (n+1)
    int *tri        # 3 * m
    unsigned char *avail  # (m+1) * 3 * (n+1)


cdef bint _bal_rec(BalCtx *ctx, int idx, int deg):
    cdef int v, s, top, used, lower
    cdef bint balanced = True
    cdef int n1 = ctx.n + 1
    if deg >= 1:
        for v in range(1, ctx.n + 1):
            if ctx.cnt[v] != ctx.cnt[n1 + v] or ctx.cnt[v] != ctx.cnt[2 * n1 + v]:
                balanced = False
                break
        if balanced:
            return True
    if idx == ctx.m:
        return False
    lower = 0
    for v in range(1, ctx.n + 1):
        top = ctx.cnt[v]
        if ctx.cnt[n1 + v] > top:
            top = ctx.cnt[n1 + v]
        if ctx.cnt[2 * n1 + v] > top:
            top = ctx.cnt[2 * n1 + v]
        lower += top
    if lower > ctx.max_degree:
        return False
    for v in range(1, ctx.n + 1):
        top = ctx.cnt[v]
        if ctx.cnt[n1 + v] > top:
            top = ctx.cnt[n1 + v]
        if ctx.cnt[2 * n1 + v] > top:
            top = ctx.cnt[2 * n1 + v]
        for s in range(3):
            if ctx.cnt[s * n1 + v] < top and not ctx.avail[(idx * 3 + s) * n1 + v]:
                return False
    if _bal_rec(ctx, idx + 1, deg):
        return True
    used = 0
    while deg + used < ctx.max_degree:
        used += 1
        for s in range(3):
            ctx.cnt[s * n1 + ctx.tri[3 * idx + s]] += 1
        if _bal_rec(ctx, idx + 1, deg + used):
            for s in range(3):
                ctx.cnt[s * n1 + ctx.tri[3 * idx + s]] -= used
            return True
    for s in range(3):
        ctx.cnt[s * n1 + ctx.tri[3 * idx + s]] -= used
    return False


def balanced_exists(int n, triples, int max_degree):
    """Compiled twin of _kernels_py.balanced_exists; same contract."""
    cdef int m = len(triples)
    if m == 0:
        return False
    cdef int n1 = n + 1
    cdef BalCtx ctx
    cdef int *buf = <int *> malloc(sizeof(int) * (3 * n1 + 3 * m))
    cdef unsigned char *av = <unsigned char *> malloc((m + 1) * 3 * n1)
    if buf == NULL or av == NULL:
        free(buf)
        free(av)
        raise MemoryError()
    ctx.n = n
    ctx.m = m
    ctx.max_degree = max_degree
    ctx.cnt = buf
    ctx.tri = buf + 3 * n1
    ctx.avail = av
    cdef int idx, s, v
    try:
        for idx in range(3 * n1):
            ctx.cnt[idx] = 0
        for idx in range(m):
            i, j, k = triples[idx]
            ctx.tri[3 * idx] = i
            ctx.tri[3 * idx + 1] = j
            ctx.tri[3 * idx + 2] = k
        for s in range(3):
            for v in range(n1):
                ctx.avail[(m * 3 + s) * n1 + v] = 0
        for idx in range(m - 1, -1, -1):
            for s in range(3):
                for v in range(n1):
                    ctx.avail[(idx * 3 + s) * n1 + v] = ctx.avail[((idx + 1) * 3 + s) * n1 + v]
                ctx.avail[(idx * 3 + s) * n1 + ctx.tri[3 * idx + s]] = 1
        return bool(_bal_rec(&ctx, 0, 0))
    finally:
        free(buf)
        free(av)
