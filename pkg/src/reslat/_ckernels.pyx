# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels; a drop-in twin of ``_pykernels``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

ctypedef unsigned long long u64


cdef int *_flat(object table, int n) except NULL:
    cdef int *out = <int *> malloc(n * n * sizeof(int))
    cdef int i, j
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        row = table[i]
        for j in range(n):
            out[i * n + j] = <int> row[j]
    return out


cdef tuple _unflat(int *t, int n):
    cdef int i, j
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(t[i * n + j])
        rows.append(tuple(row))
    return tuple(rows)


def residual_table(int n, leq, prod):
    cdef int *L = _flat(leq, n)
    cdef int *P = _flat(prod, n)
    cdef int *I = <int *> malloc(n * n * sizeof(int))
    cdef int *cands = <int *> malloc(n * sizeof(int))
    cdef int b, c, a, x, k, m, best, ok
    try:
        for b in range(n):
            for c in range(n):
                m = 0
                for a in range(n):
                    if L[P[a * n + b] * n + c]:
                        cands[m] = a
                        m += 1
                best = -1
                for k in range(m):
                    a = cands[k]
                    ok = 1
                    for x in range(m):
                        if not L[cands[x] * n + a]:
                            ok = 0
                            break
                    if ok:
                        best = a
                        break
                if best < 0:
                    return None, (b, c)
                I[b * n + c] = best
        return _unflat(I, n), None
    finally:
        free(L)
        free(P)
        free(I)
        free(cands)


def find_residuation_violation(int n, leq, prod, imp):
    cdef int *L = _flat(leq, n)
    cdef int *P = _flat(prod, n)
    cdef int *I = _flat(imp, n)
    cdef int a, b, c, ab
    try:
        for a in range(n):
            for b in range(n):
                ab = P[a * n + b]
                for c in range(n):
                    if (L[a * n + I[b * n + c]] != 0) != (L[ab * n + c] != 0):
                        return (a, b, c)
        return None
    finally:
        free(L)
        free(P)
        free(I)


def find_associativity_violation(int n, op):
    cdef int *T = _flat(op, n)
    cdef int a, b, c, ab
    try:
        for a in range(n):
            for b in range(n):
                ab = T[a * n + b]
                for c in range(n):
                    if T[ab * n + c] != T[a * n + T[b * n + c]]:
                        return (a, b, c)
        return None
    finally:
        free(T)


cdef int _popcount(u64 m):
    cdef int k = 0
    while m:
        m &= m - 1
        k += 1
    return k


cdef struct FilterScan:
    int n
    int *P
    u64 *ups
    int *order
    u64 *found
    int nfound
    int capacity


cdef int _closed(FilterScan *s, u64 mask):
    cdef int a, b, n = s.n
    for a in range(n):
        if not (mask >> a) & 1:
            continue
        for b in range(n):
            if (mask >> b) & 1 and not (mask >> s.P[a * n + b]) & 1:
                return 0
    return 1


cdef int _walk(FilterScan *s, int pos, u64 mask) except -1:
    cdef int x
    cdef u64 *grown
    if pos == s.n:
        if mask and _closed(s, mask):
            if s.nfound == s.capacity:
                grown = <u64 *> malloc(2 * s.capacity * sizeof(u64))
                if grown == NULL:
                    raise MemoryError()
                for x in range(s.nfound):
                    grown[x] = s.found[x]
                free(s.found)
                s.found = grown
                s.capacity *= 2
            s.found[s.nfound] = mask
            s.nfound += 1
        return 0
    x = s.order[pos]
    if s.ups[x] & ~mask == 0:
        _walk(s, pos + 1, mask | ((<u64> 1) << x))
    _walk(s, pos + 1, mask)
    return 0


def filter_masks(int n, leq, prod):
    cdef FilterScan s
    cdef int x, y
    if n > 63:
        raise ValueError("filter_masks supports at most 63 elements")
    s.n = n
    s.P = _flat(prod, n)
    s.ups = <u64 *> malloc(n * sizeof(u64))
    s.order = <int *> malloc(n * sizeof(int))
    s.capacity = 64
    s.found = <u64 *> malloc(s.capacity * sizeof(u64))
    s.nfound = 0
    try:
        for x in range(n):
            s.ups[x] = 0
            for y in range(n):
                if y != x and leq[x][y]:
                    s.ups[x] |= (<u64> 1) << y
        counts = []
        for x in range(n):
            counts.append(_popcount(s.ups[x]))
        order = sorted(range(n), key=lambda v: (counts[v], v))
        for x in range(n):
            s.order[x] = order[x]
        _walk(&s, 0, 0)
        masks = [s.found[x] for x in range(s.nfound)]
    finally:
        free(s.P)
        free(s.ups)
        free(s.order)
        free(s.found)
    masks.sort(key=lambda m: (bin(m).count("1"), m))
    return masks


cdef struct MonoidSearch:
    int n
    int *P
    int *J
    int *M
    int *L
    int *cells
    int ncells


cdef int _consistent(MonoidSearch *s):
    cdef int n = s.n
    cdef int a, b, c, ab, ac, abc, bc, lhs, rhs
    cdef int *P = s.P
    cdef int *J = s.J
    for a in range(n):
        for b in range(n):
            ab = P[a * n + b]
            if ab < 0:
                continue
            for c in range(n):
                ac = P[a * n + c]
                if ac >= 0:
                    abc = P[a * n + J[b * n + c]]
                    if abc >= 0 and abc != J[ab * n + ac]:
                        return 0
                bc = P[b * n + c]
                if bc >= 0:
                    lhs = P[ab * n + c]
                    rhs = P[a * n + bc]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return 0
    return 1


cdef int _search(MonoidSearch *s, int k, list out) except -1:
    cdef int n = s.n
    cdef int i, j, v, cap
    if k == s.ncells:
        out.append(_unflat(s.P, n))
        return 0
    i = s.cells[2 * k]
    j = s.cells[2 * k + 1]
    cap = s.M[i * n + j]
    for v in range(n):
        if not s.L[v * n + cap]:
            continue
        s.P[i * n + j] = v
        s.P[j * n + i] = v
        if _consistent(s):
            _search(s, k + 1, out)
    s.P[i * n + j] = -1
    s.P[j * n + i] = -1
    return 0


def search_monoids(int n, leq, join, meet, int bottom, int top):
    cdef MonoidSearch s
    cdef int x, k
    s.n = n
    s.L = _flat(leq, n)
    s.J = _flat(join, n)
    s.M = _flat(meet, n)
    s.P = <int *> malloc(n * n * sizeof(int))
    middle = [x for x in range(n) if x != bottom and x != top]
    cell_list = [(a, b) for pos, a in enumerate(middle) for b in middle[pos:]]
    s.ncells = len(cell_list)
    s.cells = <int *> malloc((2 * s.ncells + 1) * sizeof(int))
    out = []
    try:
        for x in range(n * n):
            s.P[x] = -1
        for x in range(n):
            s.P[bottom * n + x] = bottom
            s.P[x * n + bottom] = bottom
        for x in range(n):
            s.P[top * n + x] = x
            s.P[x * n + top] = x
        for k in range(s.ncells):
            s.cells[2 * k] = cell_list[k][0]
            s.cells[2 * k + 1] = cell_list[k][1]
        _search(&s, 0, out)
    finally:
        free(s.L)
        free(s.J)
        free(s.M)
        free(s.P)
        free(s.cells)
    return out
