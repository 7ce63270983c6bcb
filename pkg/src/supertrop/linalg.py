"""Exact linear algebra over Q with Fraction entries."""

from fractions import Fraction


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    M = [[Fraction(v) for v in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][c]
        M[r] = [v / pv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows):
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return len(rref(rows)[0])


def in_span(v, rows):
    if not any(v):
        return True
    return rank(list(rows) + [v]) == rank(rows)


def nullspace(rows, n):
    """Basis of {x : rows . x = 0} in Q^n."""
    R, piv = rref(rows, n) if rows else ([], [])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(R, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis
