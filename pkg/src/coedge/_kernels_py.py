"""Reference (uncompiled) implementations of the hot kernels.

These mirror ``_kernels.pyx`` exactly and are used when the extension is not
built or when ``COEDGE_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

import numpy as np


def charpoly_mod(matrix, p: int) -> list[int]:
    """Characteristic polynomial of an integer matrix modulo a prime ``p < 2**31``.

    Reduces to upper Hessenberg form by similarity, then runs the Hessenberg
    determinant recurrence.  Returns ascending coefficients, length ``n + 1``.
    """
    h = np.array(matrix, dtype=object) % p
    h = h.astype(np.int64) if h.size else np.zeros((0, 0), dtype=np.int64)
    n = h.shape[0]
    for m in range(1, n - 1):
        col = h[m:, m - 1]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            h[[i, m], :] = h[[m, i], :]
            h[:, [i, m]] = h[:, [m, i]]
        inv = pow(int(h[m, m - 1]), p - 2, p)
        for i in range(m + 1, n):
            u = int(h[i, m - 1]) * inv % p
            if u:
                h[i, :] = (h[i, :] - u * h[m, :]) % p
                h[:, m] = (h[:, m] + u * h[:, i]) % p

    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - int(h[m - 1, m - 1]) * prev) % p
        if m > 1:
            coefs = np.empty(m - 1, dtype=np.int64)
            t = 1
            for i in range(1, m):
                t = t * int(h[m - i, m - i - 1]) % p
                coefs[i - 1] = t * int(h[m - i - 1, m - 1]) % p
            idx = np.arange(m - 2, -1, -1)
            acc = ((coefs[:, None] * polys[idx]) % p).sum(axis=0) % p
            cur = (cur - acc) % p
        polys[m] = cur
    return [int(c) for c in polys[n]]


class _NotCanonical(Exception):
    pass


def is_max_canonical(rows, m: int) -> bool:
    """True iff the graph on vertices ``0..m-1`` (bitmask rows) has the
    lexicographically largest column-wise upper-triangle string among all of
    its relabellings.

    Column ``j`` contributes the word ``A[0][j] A[1][j] ... A[j-1][j]``;
    columns are compared in order.  The property is inherited by every
    leading induced subgraph, which is what orderly generation relies on.
    """
    rows = [int(r) for r in rows[:m]]
    words = []
    for j in range(m):
        w = 0
        for i in range(j):
            w = (w << 1) | ((rows[i] >> j) & 1)
        words.append(w)
    perm = [0] * m

    def rec(j: int, used: int) -> None:
        target = words[j]
        for v in range(m):
            if (used >> v) & 1:
                continue
            w = 0
            for i in range(j):
                w = (w << 1) | ((rows[perm[i]] >> v) & 1)
            if w > target:
                raise _NotCanonical
            if w < target:
                continue
            if j + 1 < m:
                perm[j] = v
                rec(j + 1, used | (1 << v))

    if m <= 1:
        return True
    try:
        rec(0, 0)
    except _NotCanonical:
        return False
    return True
