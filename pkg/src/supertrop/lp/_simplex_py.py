"""Pure Python integer-preserving simplex kernel.

Solves  min cost.y  s.t.  rows.y = rhs,  y >= 0  with integer data.  The
tableau is kept fraction free: every entry is an integer and the common
denominator is the current pivot value ``D`` (Edmonds' pivoting).  Bland's
rule is used throughout, so the method terminates on degenerate input.

Returns ``(status, y, pi, D)`` where status is 0 (optimal), 1 (infeasible)
or 2 (unbounded); ``y[j]/D`` is the primal solution and ``pi[r]/D`` the
simplex multiplier of row r.
"""

OPTIMAL, INFEASIBLE, UNBOUNDED = 0, 1, 2


def _pivot(T, r, s, D):
    p = T[r][s]
    prow = T[r]
    width = len(prow)
    for i in range(len(T)):
        if i == r:
            continue
        row = T[i]
        f = row[s]
        if f == 0:
            if p != D:
                for j in range(width):
                    if row[j]:
                        row[j] = row[j] * p // D
            continue
        for j in range(width):
            row[j] = (row[j] * p - f * prow[j]) // D
    if p < 0:
        for row in T:
            for j in range(width):
                row[j] = -row[j]
        return -p
    return p


def _ratio_row(T, basis, s, rhs_col, nrows):
    best = -1
    for i in range(nrows):
        a = T[i][s]
        if a <= 0:
            continue
        if best < 0:
            best = i
            continue
        # compare T[i][rhs]/a with T[best][rhs]/T[best][s]
        lhs = T[i][rhs_col] * T[best][s]
        rhs = T[best][rhs_col] * a
        if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
            best = i
    return best


def solve_std(rows, rhs, cost):
    k = len(rows)
    N = len(cost)
    width = N + k + 1
    rc = width - 1
    sign = []
    T = []
    for r in range(k):
        sg = -1 if rhs[r] < 0 else 1
        sign.append(sg)
        row = [sg * v for v in rows[r]] + [0] * k + [sg * rhs[r]]
        row[N + r] = 1
        T.append(row)
    z1 = [0] * width
    for j in list(range(N)) + [rc]:
        z1[j] = -sum(T[r][j] for r in range(k))
    z2 = list(cost) + [0] * (k + 1)
    T.append(z2)
    T.append(z1)
    basis = list(range(N, N + k))
    D = 1

    # phase 1
    while True:
        s = -1
        for j in range(N):
            if z1[j] < 0:
                s = j
                break
        if s < 0:
            break
        r = _ratio_row(T, basis, s, rc, k)
        D = _pivot(T, r, s, D)
        basis[r] = s
    if z1[rc] != 0:
        return INFEASIBLE, None, None, D

    # drive artificials out of the basis where possible
    for r in range(k):
        if basis[r] < N:
            continue
        for j in range(N):
            if T[r][j] != 0:
                D = _pivot(T, r, j, D)
                basis[r] = j
                break
    T.pop()

    # phase 2
    while True:
        s = -1
        for j in range(N):
            if z2[j] < 0:
                s = j
                break
        if s < 0:
            break
        r = _ratio_row(T, basis, s, rc, k)
        if r < 0:
            return UNBOUNDED, None, None, D
        D = _pivot(T, r, s, D)
        basis[r] = s

    y = [0] * N
    for r in range(k):
        if basis[r] < N:
            y[basis[r]] = T[r][rc]
    pi = [-sign[r] * z2[N + r] for r in range(k)]
    return OPTIMAL, y, pi, D
