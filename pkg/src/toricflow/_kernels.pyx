# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (see _pykernels.py for the reference).

Tableau entries live in 64-bit integers with 128-bit intermediates.  Any
result that would not fit raises OverflowError and the caller reruns the
pure-Python kernel with unbounded integers.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef int64_t I64_MAX = 0x7FFFFFFFFFFFFFFF


cdef inline int fits(int128 v) nogil:
    return -<int128>I64_MAX <= v <= <int128>I64_MAX


def phase_one(A, b):
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t N = len(A[0]) if m else 0
    cdef Py_ssize_t width = N + m + 1
    cdef Py_ssize_t i, j, col, row
    cdef int64_t s, p, f, D = 1
    cdef int128 v, lhs, rhs
    cdef int64_t *T = <int64_t *> malloc(sizeof(int64_t) * (m * width + 1))
    cdef int64_t *z = <int64_t *> malloc(sizeof(int64_t) * width)
    cdef Py_ssize_t *basis = <Py_ssize_t *> malloc(sizeof(Py_ssize_t) * (m + 1))
    cdef int64_t *prow
    cdef int64_t *r
    cdef bint overflow = False
    if T == NULL or z == NULL or basis == NULL:
        free(T); free(z); free(basis)
        raise MemoryError()
    try:
        for i in range(m):
            s = -1 if b[i] < 0 else 1
            for j in range(width):
                T[i * width + j] = 0
            for j in range(N):
                T[i * width + j] = s * <int64_t> A[i][j]
            T[i * width + N + i] = 1
            T[i * width + width - 1] = s * <int64_t> b[i]
            basis[i] = N + i
        for j in range(width):
            z[j] = 0
        for i in range(m):
            for j in range(N):
                z[j] -= T[i * width + j]
            z[width - 1] -= T[i * width + width - 1]
        with nogil:
            while True:
                col = -1
                for j in range(N):
                    if z[j] < 0:
                        col = j
                        break
                if col < 0:
                    break
                row = -1
                for i in range(m):
                    f = T[i * width + col]
                    if f <= 0:
                        continue
                    if row < 0:
                        row = i
                        continue
                    lhs = <int128> T[i * width + width - 1] * T[row * width + col]
                    rhs = <int128> T[row * width + width - 1] * f
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[row]):
                        row = i
                if row < 0:
                    break
                p = T[row * width + col]
                prow = T + row * width
                for i in range(m):
                    if i == row:
                        continue
                    r = T + i * width
                    f = r[col]
                    for j in range(width):
                        v = (<int128> r[j] * p - <int128> f * prow[j]) / D
                        if not fits(v):
                            overflow = True
                        r[j] = <int64_t> v
                f = z[col]
                for j in range(width):
                    v = (<int128> z[j] * p - <int128> f * prow[j]) / D
                    if not fits(v):
                        overflow = True
                    z[j] = <int64_t> v
                basis[row] = col
                D = p
                if overflow:
                    break
        if overflow:
            raise OverflowError("tableau entry exceeds 64 bits")
        feasible = z[width - 1] == 0
        out_basis = [basis[i] for i in range(m)]
        out_rhs = [T[i * width + width - 1] for i in range(m)]
        art = [z[N + i] for i in range(m)]
        return feasible, out_basis, out_rhs, D, art
    finally:
        free(T)
        free(z)
        free(basis)


cdef inline int lowest_bit(uint64_t x) nogil:
    cdef int k = 0
    while not (x >> k) & 1:
        k += 1
    return k


cdef inline int highest_bit(uint64_t x) nogil:
    cdef int k = 63
    while not (x >> k) & 1:
        k -= 1
    return k


def extract_sqfree(vecs, chain, plus, minus, revlex):
    cdef Py_ssize_t m = len(vecs)
    cdef Py_ssize_t k = len(vecs[0]) if m else 0
    cdef Py_ssize_t r = len(chain)
    cdef Py_ssize_t i, j, t, q
    cdef int128 acc
    cdef int s, bit
    cdef bint rl = bool(revlex)
    cdef int64_t *V = <int64_t *> malloc(sizeof(int64_t) * (m * k + 1))
    cdef int64_t *W = <int64_t *> malloc(sizeof(int64_t) * (r * k + 1))
    cdef uint64_t *P = <uint64_t *> malloc(sizeof(uint64_t) * (m + 1))
    cdef uint64_t *Q = <uint64_t *> malloc(sizeof(uint64_t) * (m + 1))
    cdef uint64_t *lead = <uint64_t *> malloc(sizeof(uint64_t) * (m + 1))
    cdef uint64_t *trail = <uint64_t *> malloc(sizeof(uint64_t) * (m + 1))
    cdef int *orient = <int *> malloc(sizeof(int) * (m + 1))
    cdef char *minimal = <char *> malloc(m + 1)
    cdef char *taken = <char *> malloc(m + 1)
    cdef uint64_t L, M, both
    if (V == NULL or W == NULL or P == NULL or Q == NULL or lead == NULL
            or trail == NULL or orient == NULL or minimal == NULL or taken == NULL):
        free(V); free(W); free(P); free(Q); free(lead); free(trail)
        free(orient); free(minimal); free(taken)
        raise MemoryError()
    try:
        for i in range(m):
            row = vecs[i]
            for j in range(k):
                V[i * k + j] = <int64_t> row[j]
            P[i] = <uint64_t> plus[i]
            Q[i] = <uint64_t> minus[i]
        for t in range(r):
            row = chain[t]
            for j in range(k):
                W[t * k + j] = <int64_t> row[j]
        with nogil:
            for i in range(m):
                s = 0
                for t in range(r):
                    acc = 0
                    for j in range(k):
                        acc += <int128> W[t * k + j] * V[i * k + j]
                    if acc != 0:
                        s = 1 if acc > 0 else -1
                        break
                if s == 0:
                    both = P[i] | Q[i]
                    if rl:
                        bit = highest_bit(both)
                        s = 1 if (Q[i] >> bit) & 1 else -1
                    else:
                        bit = lowest_bit(both)
                        s = 1 if (P[i] >> bit) & 1 else -1
                orient[i] = s
                if s > 0:
                    lead[i] = P[i]
                    trail[i] = Q[i]
                else:
                    lead[i] = Q[i]
                    trail[i] = P[i]
            # a lead is minimal when no strictly smaller lead divides it
            for i in range(m):
                minimal[i] = 1
                taken[i] = 0
                L = lead[i]
                for q in range(m):
                    M = lead[q]
                    if M != L and (M & L) == M:
                        minimal[i] = 0
                        break
            for i in range(m):
                if not minimal[i]:
                    continue
                L = lead[i]
                s = 1
                for q in range(i):
                    if taken[q] and lead[q] == L:
                        s = 0
                        break
                if not s:
                    continue
                for q in range(m):
                    if minimal[q] and (lead[q] & trail[i]) == lead[q]:
                        s = 0
                        break
                if s:
                    taken[i] = 1
        return [(i, orient[i]) for i in range(m) if taken[i]]
    finally:
        free(V); free(W); free(P); free(Q); free(lead); free(trail)
        free(orient); free(minimal); free(taken)
