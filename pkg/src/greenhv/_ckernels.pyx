# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank kernel over F_p for p < 2**31."""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


cdef int64_t _inv_mod(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(rows, long long p):
    """Rank over F_p of an integer matrix given as a sequence of rows."""
    if p < 2 or p >= 2147483648:
        raise ValueError("compiled kernel needs 2 <= p < 2**31")
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 0
    cdef Py_ssize_t n = len(rows[0])
    if n == 0:
        return 0
    cdef int64_t *a = <int64_t *> malloc(m * n * sizeof(int64_t))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, col, piv, rank = 0
    cdef int64_t f, inv, tmp
    try:
        for i in range(m):
            row = rows[i]
            for j in range(n):
                a[i * n + j] = <int64_t> (row[j] % p)
        with nogil:
            for col in range(n):
                piv = -1
                for i in range(rank, m):
                    if a[i * n + col] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != rank:
                    for j in range(n):
                        tmp = a[piv * n + j]
                        a[piv * n + j] = a[rank * n + j]
                        a[rank * n + j] = tmp
                inv = _inv_mod(a[rank * n + col], p)
                for j in range(col, n):
                    a[rank * n + j] = (a[rank * n + j] * inv) % p
                for i in range(rank + 1, m):
                    f = a[i * n + col]
                    if f != 0:
                        for j in range(col, n):
                            a[i * n + j] = (a[i * n + j] - f * a[rank * n + j]) % p
                            if a[i * n + j] < 0:
                                a[i * n + j] += p
                rank += 1
                if rank == m:
                    break
    finally:
        free(a)
    return rank
