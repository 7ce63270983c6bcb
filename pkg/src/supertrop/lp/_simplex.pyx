# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer-preserving simplex kernel.

Same algorithm as ``_simplex_py`` on a flat int64 tableau.  Intermediate
products are formed in 128 bit; if a result does not fit in 64 bits the
kernel raises OverflowError and the caller falls back to the pure kernel.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    typedef __int128 i128;
    static inline int ff_update(long long a, long long p, long long f,
                                long long b, long long D, long long *out) {
        i128 v = (i128)a * p - (i128)f * b;
        v /= D;
        if (v > (i128)0x7fffffffffffffffLL || v < -(i128)0x7fffffffffffffffLL) return 1;
        *out = (long long)v;
        return 0;
    }
    static inline int cross_lt(long long a, long long b, long long c, long long d, int *lt, int *eq) {
        i128 l = (i128)a * b, r = (i128)c * d;
        *lt = l < r;
        *eq = l == r;
        return 0;
    }
    """
    int ff_update(long long a, long long p, long long f, long long b,
                  long long D, long long *out) nogil
    int cross_lt(long long a, long long b, long long c, long long d,
                 int *lt, int *eq) nogil


cdef int _pivot(long long *T, int nrows, int width, int r, int s,
                long long *D) nogil:
    cdef long long p = T[r * width + s]
    cdef long long f, d = D[0]
    cdef int i, j
    for i in range(nrows):
        if i == r:
            continue
        f = T[i * width + s]
        for j in range(width):
            if ff_update(T[i * width + j], p, f, T[r * width + j], d,
                         &T[i * width + j]):
                return 1
    if p < 0:
        for i in range(nrows * width):
            T[i] = -T[i]
        p = -p
    D[0] = p
    return 0


cdef int _ratio_row(long long *T, int width, int *basis, int s, int rc,
                    int k) nogil:
    cdef int best = -1, i, lt, eq
    cdef long long a
    for i in range(k):
        a = T[i * width + s]
        if a <= 0:
            continue
        if best < 0:
            best = i
            continue
        cross_lt(T[i * width + rc], T[best * width + s],
                 T[best * width + rc], a, &lt, &eq)
        if lt or (eq and basis[i] < basis[best]):
            best = i
    return best


def solve_std(rows, rhs, cost):
    cdef int k = len(rows)
    cdef int N = len(cost)
    cdef int width = N + k + 1
    cdef int rc = width - 1
    cdef int nrows = k + 2
    cdef int z2 = k, z1 = k + 1
    cdef long long D = 1
    cdef int r, j, s, sg, status = 0
    cdef long long *T = <long long *> malloc(nrows * width * sizeof(long long))
    cdef int *basis = <int *> malloc(k * sizeof(int))
    cdef int *sign = <int *> malloc(k * sizeof(int))
    if T == NULL or basis == NULL or sign == NULL:
        free(T); free(basis); free(sign)
        raise MemoryError()
    try:
        for r in range(nrows * width):
            T[r] = 0
        for r in range(k):
            sg = -1 if rhs[r] < 0 else 1
            sign[r] = sg
            row = rows[r]
            for j in range(N):
                T[r * width + j] = sg * row[j]
            T[r * width + N + r] = 1
            T[r * width + rc] = sg * rhs[r]
            basis[r] = N + r
        for j in range(N):
            T[z2 * width + j] = cost[j]
        for j in range(width):
            if N <= j < rc:
                continue
            for r in range(k):
                T[z1 * width + j] -= T[r * width + j]

        with nogil:
            while True:
                s = -1
                for j in range(N):
                    if T[z1 * width + j] < 0:
                        s = j
                        break
                if s < 0:
                    break
                r = _ratio_row(T, width, basis, s, rc, k)
                if _pivot(T, nrows, width, r, s, &D):
                    status = -1
                    break
                basis[r] = s
        if status < 0:
            raise OverflowError("simplex tableau exceeds 64 bits")
        if T[z1 * width + rc] != 0:
            return 1, None, None, D

        for r in range(k):
            if basis[r] < N:
                continue
            for j in range(N):
                if T[r * width + j] != 0:
                    if _pivot(T, nrows, width, r, j, &D):
                        raise OverflowError("simplex tableau exceeds 64 bits")
                    basis[r] = j
                    break
        nrows = k + 1

        with nogil:
            while True:
                s = -1
                for j in range(N):
                    if T[z2 * width + j] < 0:
                        s = j
                        break
                if s < 0:
                    break
                r = _ratio_row(T, width, basis, s, rc, k)
                if r < 0:
                    status = 2
                    break
                if _pivot(T, nrows, width, r, s, &D):
                    status = -1
                    break
                basis[r] = s
        if status < 0:
            raise OverflowError("simplex tableau exceeds 64 bits")
        if status == 2:
            return 2, None, None, D

        y = [0] * N
        for r in range(k):
            if basis[r] < N:
                y[basis[r]] = T[r * width + rc]
        pi = [-sign[r] * T[z2 * width + N + r] for r in range(k)]
        return 0, y, pi, D
    finally:
        free(T)
        free(basis)
        free(sign)
