# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: modular characteristic polynomials and the orderly
canonicity test.  Semantics match ``_kernels_py`` exactly."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

ctypedef unsigned long long u64


cdef inline u64 _powmod(u64 a, u64 e, u64 p) nogil:
    cdef u64 r = 1
    a %= p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


def charpoly_mod(matrix, long long p):
    """Characteristic polynomial of an integer matrix modulo a prime ``p < 2**31``."""
    cdef Py_ssize_t n = len(matrix)
    cdef Py_ssize_t i, j, m, r, piv
    cdef u64 P = <u64>p
    cdef u64 u, inv, t, tmp
    cdef u64 *h = <u64 *>malloc(max(n * n, 1) * sizeof(u64))
    cdef u64 *polys = <u64 *>malloc((n + 1) * (n + 1) * sizeof(u64))
    if h == NULL or polys == NULL:
        free(h)
        free(polys)
        raise MemoryError()
    try:
        for i in range(n):
            row = matrix[i]
            for j in range(n):
                h[i * n + j] = <u64>(int(row[j]) % p)
        with nogil:
            for m in range(1, n - 1):
                piv = -1
                for i in range(m, n):
                    if h[i * n + m - 1] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != m:
                    for j in range(n):
                        tmp = h[piv * n + j]
                        h[piv * n + j] = h[m * n + j]
                        h[m * n + j] = tmp
                    for r in range(n):
                        tmp = h[r * n + piv]
                        h[r * n + piv] = h[r * n + m]
                        h[r * n + m] = tmp
                inv = _powmod(h[m * n + m - 1], P - 2, P)
                for i in range(m + 1, n):
                    u = h[i * n + m - 1] * inv % P
                    if u == 0:
                        continue
                    for j in range(n):
                        h[i * n + j] = (h[i * n + j] + (P - u) * h[m * n + j]) % P
                    for r in range(n):
                        h[r * n + m] = (h[r * n + m] + u * h[r * n + i]) % P

            for i in range((n + 1) * (n + 1)):
                polys[i] = 0
            polys[0] = 1
            for m in range(1, n + 1):
                tmp = h[(m - 1) * n + m - 1]
                for j in range(n + 1):
                    u = (P - tmp) * polys[(m - 1) * (n + 1) + j] % P
                    if j > 0:
                        u = (u + polys[(m - 1) * (n + 1) + j - 1]) % P
                    polys[m * (n + 1) + j] = u
                t = 1
                for i in range(1, m):
                    t = t * h[(m - i) * n + m - i - 1] % P
                    if t == 0:
                        break
                    u = t * h[(m - i - 1) * n + m - 1] % P
                    if u == 0:
                        continue
                    u = P - u
                    for j in range(n + 1):
                        polys[m * (n + 1) + j] = (polys[m * (n + 1) + j]
                                                  + u * polys[(m - i - 1) * (n + 1) + j]) % P
        return [int(polys[n * (n + 1) + j]) for j in range(n + 1)]
    finally:
        free(h)
        free(polys)


cdef int _rec(int j, int m, u64 used, const u64 *rows, const u64 *words, int *perm) nogil:
    # 1: a relabelling beats the input string; 0: keep searching
    cdef int v, i
    cdef u64 w, target = words[j]
    for v in range(m):
        if (used >> v) & 1:
            continue
        w = 0
        for i in range(j):
            w = (w << 1) | ((rows[perm[i]] >> v) & 1)
        if w > target:
            return 1
        if w < target:
            continue
        if j + 1 < m:
            perm[j] = v
            if _rec(j + 1, m, used | (<u64>1 << v), rows, words, perm):
                return 1
    return 0


def is_max_canonical(rows, int m):
    """True iff the graph on ``0..m-1`` is the lexicographic maximum of its
    column-wise upper-triangle string over all relabellings (``m <= 63``)."""
    cdef u64 crow[64]
    cdef u64 words[64]
    cdef int perm[64]
    cdef int i, j
    cdef u64 w
    if m <= 1:
        return True
    if m > 63:
        raise ValueError("is_max_canonical supports at most 63 vertices")
    for i in range(m):
        crow[i] = <u64>(int(rows[i]) & ((1 << m) - 1))
    for j in range(m):
        w = 0
        for i in range(j):
            w = (w << 1) | ((crow[i] >> j) & 1)
        words[j] = w
    with nogil:
        i = _rec(0, m, 0, crow, words, perm)
    return i == 0
