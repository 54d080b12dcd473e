# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Same functions, arguments, results and search orders as ``_pykernels``;
bitmasks are held in 64-bit words, so inputs are limited to 64 vertices
(larger inputs are delegated to the pure-Python module).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

from cott import _pykernels

DEF MAXN = 64


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int bitlen(uint64_t x) nogil:
    cdef int k = 0
    while x:
        x >>= 1
        k += 1
    return k


# simultaneous staircase search ---------------------------------------------------

cdef struct SimState:
    int n
    uint64_t aug[MAXN]
    uint64_t nonadj[MAXN]
    int pos[MAXN]
    int last[MAXN]
    int order[MAXN]


cdef bint sim_violated(SimState* s, uint64_t placed) nogil:
    cdef int u, v, lu, pu, lv
    cdef uint64_t m
    for u in range(s.n):
        lu = s.last[u]
        if lu < 0:
            continue
        pu = s.pos[u]
        if pu < 0 and (s.nonadj[u] >> u) & 1:
            return True
        m = s.nonadj[u] & placed
        while m:
            v = lowbit(m)
            m &= m - 1
            if s.pos[v] < lu:
                lv = s.last[v]
                if pu >= 0:
                    if lv > pu:
                        return True
                elif lv >= 0:
                    return True
    return False


cdef bint sim_rec(SimState* s, int p, uint64_t placed) nogil:
    cdef int position, x, y, k, nchanged
    cdef int changed[MAXN]
    cdef bint twin
    cdef uint64_t m
    if p == 0:
        return True
    position = p - 1
    for x in range(s.n):
        if (placed >> x) & 1:
            continue
        twin = False
        for y in range(x):
            if not (placed >> y) & 1 and s.aug[y] == s.aug[x]:
                twin = True
                break
        if twin:
            continue
        s.pos[x] = position
        nchanged = 0
        m = s.aug[x]
        while m:
            y = lowbit(m)
            m &= m - 1
            if s.last[y] < 0:
                changed[nchanged] = y
                nchanged += 1
                s.last[y] = position
        if not sim_violated(s, placed | ((<uint64_t>1) << x)):
            s.order[position] = x
            if sim_rec(s, position, placed | ((<uint64_t>1) << x)):
                return True
        for k in range(nchanged):
            s.last[changed[k]] = -1
        s.pos[x] = -1
    return False


def sim_staircase_search(adj, int n, loops):
    if n > MAXN:
        return _pykernels.sim_staircase_search(adj, n, loops)
    if n == 0:
        return []
    cdef SimState* s = <SimState*>malloc(sizeof(SimState))
    cdef int v
    cdef uint64_t full = (~(<uint64_t>0)) if n == 64 else (((<uint64_t>1) << n) - 1)
    cdef bint ok
    try:
        s.n = n
        for v in range(n):
            s.aug[v] = <uint64_t>adj[v] | ((<uint64_t>((loops >> v) & 1)) << v)
            s.nonadj[v] = full & ~s.aug[v]
            s.pos[v] = -1
            s.last[v] = -1
            s.order[v] = -1
        with nogil:
            ok = sim_rec(s, n, 0)
        if not ok:
            return None
        return [s.order[v] for v in range(n)]
    finally:
        free(s)


# independent staircase search ------------------------------------------------------

cdef struct IndState:
    int n_rows
    int n_cols
    uint64_t rows[MAXN]
    uint64_t cols[MAXN]
    uint64_t reach[MAXN]
    int row_order[MAXN]
    int depth


cdef bint ind_rec(IndState* s, uint64_t remaining) nogil:
    cdef uint64_t full_cols, m, rest, ones, targets, desc, t_m
    cdef uint64_t saved[MAXN]
    cdef int r, r2, j, t, x
    cdef bint twin, cyclic, did_save
    if not remaining:
        return True
    full_cols = (~(<uint64_t>0)) if s.n_cols == 64 else (((<uint64_t>1) << s.n_cols) - 1)
    m = remaining
    while m:
        r = lowbit(m)
        m &= m - 1
        twin = False
        t_m = remaining & ((((<uint64_t>1) << r) - 1))
        while t_m:
            r2 = lowbit(t_m)
            t_m &= t_m - 1
            if s.rows[r2] == s.rows[r]:
                twin = True
                break
        if twin:
            continue
        rest = remaining & ~((<uint64_t>1) << r)
        ones = s.rows[r]
        targets = 0
        t_m = full_cols & ~ones
        while t_m:
            j = lowbit(t_m)
            t_m &= t_m - 1
            if s.cols[j] & rest:
                targets |= (<uint64_t>1) << j
        did_save = False
        if ones and targets:
            cyclic = False
            t_m = targets
            while t_m:
                t = lowbit(t_m)
                t_m &= t_m - 1
                if s.reach[t] & ones:
                    cyclic = True
                    break
            if cyclic:
                continue
            desc = targets
            t_m = targets
            while t_m:
                t = lowbit(t_m)
                t_m &= t_m - 1
                desc |= s.reach[t]
            for x in range(s.n_cols):
                saved[x] = s.reach[x]
            did_save = True
            for x in range(s.n_cols):
                if (ones >> x) & 1 or s.reach[x] & ones:
                    s.reach[x] |= desc
        s.row_order[s.depth] = r
        s.depth += 1
        if ind_rec(s, rest):
            return True
        s.depth -= 1
        if did_save:
            for x in range(s.n_cols):
                s.reach[x] = saved[x]
    return False


def ind_staircase_search(rows, int n_rows, int n_cols):
    if n_rows > MAXN or n_cols > MAXN:
        return _pykernels.ind_staircase_search(rows, n_rows, n_cols)
    cdef IndState* s = <IndState*>malloc(sizeof(IndState))
    cdef int i, j, c, x
    cdef uint64_t left, all_rows
    cdef bint ok, blocked
    try:
        s.n_rows = n_rows
        s.n_cols = n_cols
        s.depth = 0
        for j in range(n_cols):
            s.cols[j] = 0
            s.reach[j] = 0
        for i in range(n_rows):
            s.rows[i] = <uint64_t>rows[i]
            for j in range(n_cols):
                if (s.rows[i] >> j) & 1:
                    s.cols[j] |= (<uint64_t>1) << i
        all_rows = (~(<uint64_t>0)) if n_rows == 64 else (((<uint64_t>1) << n_rows) - 1)
        with nogil:
            ok = ind_rec(s, all_rows)
        if not ok:
            return None
        row_order = [s.row_order[i] for i in range(n_rows)]
        col_order = []
        left = (~(<uint64_t>0)) if n_cols == 64 else (((<uint64_t>1) << n_cols) - 1)
        while left:
            for c in range(n_cols):
                if not (left >> c) & 1:
                    continue
                blocked = False
                for x in range(n_cols):
                    if (left >> x) & 1 and (s.reach[x] >> c) & 1:
                        blocked = True
                        break
                if not blocked:
                    col_order.append(c)
                    left &= ~((<uint64_t>1) << c)
                    break
        return row_order, col_order
    finally:
        free(s)


# brute-force simultaneous scan ---------------------------------------------------------

cdef bint next_permutation(int* a, int n) nogil:
    cdef int i = n - 2, j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


cdef bint brute_scan(uint64_t* aug, int n, int* order) nogil:
    cdef int pos[MAXN]
    cdef uint64_t prow[MAXN]
    cdef int i, j, p, u
    cdef uint64_t m, row
    cdef bint ok
    for i in range(n):
        order[i] = i
    while True:
        for p in range(n):
            pos[order[p]] = p
        for p in range(n):
            row = 0
            m = aug[order[p]]
            while m:
                u = lowbit(m)
                m &= m - 1
                row |= (<uint64_t>1) << pos[u]
            prow[p] = row
        ok = True
        for i in range(n):
            for j in range(n):
                if (prow[i] >> j) & 1:
                    continue
                if (prow[i] >> (j + 1)) and (prow[j] >> (i + 1)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
        if not next_permutation(order, n):
            return False


def sim_staircase_brute(adj, int n, loops):
    if n > 20:
        return _pykernels.sim_staircase_brute(adj, n, loops)
    cdef uint64_t aug[MAXN]
    cdef int order[MAXN]
    cdef int v
    cdef bint ok
    if n == 0:
        return []
    for v in range(n):
        aug[v] = <uint64_t>adj[v] | ((<uint64_t>((loops >> v) & 1)) << v)
    with nogil:
        ok = brute_scan(aug, n, order)
    if not ok:
        return None
    return [order[v] for v in range(n)]


# induced subgraph embedding -----------------------------------------------------------

cdef struct EmbState:
    int nh
    int npat
    bint exact
    uint64_t host[MAXN]
    uint64_t pattern[MAXN]
    int hdeg[MAXN]
    int pdeg[MAXN]
    int seq[MAXN]
    int image[MAXN]
    uint64_t used


cdef bint emb_rec(EmbState* s, int k) nogil:
    cdef int p, q, h, i
    cdef uint64_t want, mapped
    if k == s.npat:
        return True
    p = s.seq[k]
    want = 0
    mapped = 0
    for i in range(k):
        q = s.seq[i]
        mapped |= (<uint64_t>1) << s.image[q]
        if (s.pattern[p] >> q) & 1:
            want |= (<uint64_t>1) << s.image[q]
    for h in range(s.nh):
        if (s.used >> h) & 1:
            continue
        if s.exact:
            if s.hdeg[h] != s.pdeg[p]:
                continue
        elif s.hdeg[h] < s.pdeg[p]:
            continue
        if (s.host[h] & mapped) != want:
            continue
        s.image[p] = h
        s.used |= (<uint64_t>1) << h
        if emb_rec(s, k + 1):
            return True
        s.used &= ~((<uint64_t>1) << h)
        s.image[p] = -1
    return False


def induced_embedding(host, int nh, pattern, int npat, exact_degree=False):
    if nh > MAXN or npat > MAXN:
        return _pykernels.induced_embedding(host, nh, pattern, npat, exact_degree)
    if npat > nh:
        return None
    if npat == 0:
        return []
    cdef EmbState* s = <EmbState*>malloc(sizeof(EmbState))
    cdef int v, i, best, c0, c1, c2, k0, k1, k2
    cdef uint64_t chosen = 0
    cdef bint ok
    try:
        s.nh = nh
        s.npat = npat
        s.exact = bool(exact_degree)
        s.used = 0
        for v in range(nh):
            s.host[v] = <uint64_t>host[v]
            s.hdeg[v] = popcount(s.host[v])
        for v in range(npat):
            s.pattern[v] = <uint64_t>pattern[v]
            s.pdeg[v] = popcount(s.pattern[v])
            s.image[v] = -1
        # key (ordered neighbours, degree, -id), maximised
        for i in range(npat):
            best = -1
            for v in range(npat):
                if (chosen >> v) & 1:
                    continue
                c0 = popcount(s.pattern[v] & chosen)
                c1 = s.pdeg[v]
                c2 = -v
                if best < 0 or (c0, c1, c2) > (k0, k1, k2):
                    best = v
                    k0 = c0
                    k1 = c1
                    k2 = c2
            s.seq[i] = best
            chosen |= (<uint64_t>1) << best
        with nogil:
            ok = emb_rec(s, 0)
        if not ok:
            return None
        return [s.image[v] for v in range(npat)]
    finally:
        free(s)
