"""Pure-Python table kernels.

Each function has a twin in ``_ckernels.pyx`` with an identical signature and
identical output (including ordering); :mod:`reslat.kernels` chooses between
them at import time. Tables are tuples of tuples indexed ``table[a][b]``;
``leq`` is a boolean matrix.
"""

BACKEND = "python"


def residual_table(n, leq, prod):
    """Derive ``imp[b][c] = max{a : prod[a][b] <= c}``.

    Returns ``(imp, None)`` or ``(None, (b, c))`` for the first pair whose
    candidate set has no maximum.
    """
    imp = []
    for b in range(n):
        row = []
        for c in range(n):
            cands = [a for a in range(n) if leq[prod[a][b]][c]]
            best = -1
            for a in cands:
                if all(leq[x][a] for x in cands):
                    best = a
                    break
            if best < 0:
                return None, (b, c)
            row.append(best)
        imp.append(tuple(row))
    return tuple(imp), None


def find_residuation_violation(n, leq, prod, imp):
    for a in range(n):
        for b in range(n):
            ab = prod[a][b]
            for c in range(n):
                if leq[a][imp[b][c]] != leq[ab][c]:
                    return (a, b, c)
    return None


def find_associativity_violation(n, op):
    for a in range(n):
        for b in range(n):
            ab = op[a][b]
            for c in range(n):
                if op[ab][c] != op[a][op[b][c]]:
                    return (a, b, c)
    return None


def _strict_uppers(n, leq):
    return [
        sum(1 << y for y in range(n) if y != x and leq[x][y]) for x in range(n)
    ]


def filter_masks(n, leq, prod):
    """All prod-closed nonempty up-sets, as bitmasks sorted by (size, mask)."""
    ups = _strict_uppers(n, leq)
    # top-down linear extension: fewer strict uppers first
    order = sorted(range(n), key=lambda x: (bin(ups[x]).count("1"), x))
    found = []

    def closed(mask):
        members = [x for x in range(n) if mask >> x & 1]
        for a in members:
            pa = prod[a]
            for b in members:
                if not mask >> pa[b] & 1:
                    return False
        return True

    def walk(pos, mask):
        if pos == n:
            if mask and closed(mask):
                found.append(mask)
            return
        x = order[pos]
        if ups[x] & ~mask == 0:
            walk(pos + 1, mask | (1 << x))
        walk(pos + 1, mask)

    walk(0, 0)
    found.sort(key=lambda m: (bin(m).count("1"), m))
    return found


def search_monoids(n, leq, join, meet, bottom, top):
    """Every commutative, associative prod table with unit ``top`` that
    distributes over binary joins and sends ``bottom`` to ``bottom``.

    On a finite lattice these are exactly the residuated products. Output
    order is the DFS order over the upper-triangular middle cells.
    """
    P = [[-1] * n for _ in range(n)]
    for x in range(n):
        P[bottom][x] = P[x][bottom] = bottom
        P[top][x] = P[x][top] = x
    middle = [x for x in range(n) if x != bottom and x != top]
    cells = [(i, j) for k, i in enumerate(middle) for j in middle[k:]]
    out = []

    def consistent():
        for a in range(n):
            Pa = P[a]
            for b in range(n):
                ab = Pa[b]
                if ab < 0:
                    continue
                Pab = P[ab]
                jb = join[b]
                for c in range(n):
                    ac = Pa[c]
                    if ac >= 0:
                        abc = Pa[jb[c]]
                        if abc >= 0 and abc != join[ab][ac]:
                            return False
                    bc = P[b][c]
                    if bc >= 0:
                        lhs = Pab[c]
                        rhs = Pa[bc]
                        if lhs >= 0 and rhs >= 0 and lhs != rhs:
                            return False
        return True

    def walk(k):
        if k == len(cells):
            out.append(tuple(tuple(row) for row in P))
            return
        i, j = cells[k]
        cap = meet[i][j]
        for v in range(n):
            if not leq[v][cap]:
                continue
            P[i][j] = P[j][i] = v
            if consistent():
                walk(k + 1)
        P[i][j] = P[j][i] = -1

    walk(0)
    return out
