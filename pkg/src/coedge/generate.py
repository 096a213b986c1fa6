"""Isomorph-free exhaustive generation of k-regular graphs by orderly
generation, and the search for co-edge-regular graphs among them.

Vertices are added one at a time.  A labelled graph is kept only if its
column-wise upper-triangle string is the lexicographic maximum over all
relabellings.  That property passes to the graph on the first m vertices, so
every isomorphism class is produced exactly once, from a canonical parent.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterator

from . import kernels
from .graph import Graph
from .regularity import Witness, co_edge_regular_params

DEFAULT_MAX_N = 12
MAX_N_ENV = "COEDGE_MAX_N"


class SearchLimitError(ValueError):
    """Requested search exceeds the configured size cap."""


def max_n() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise SearchLimitError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None


def _check_args(n: int, k: int) -> None:
    if n < 1 or k < 0 or k >= n:
        raise ValueError("need 0 <= k < n")
    if (n * k) % 2:
        raise ValueError(f"no {k}-regular graph on {n} vertices: n*k is odd")
    cap = max_n()
    if n > cap:
        raise SearchLimitError(f"n = {n} exceeds the search cap {cap} (set {MAX_N_ENV} to raise it)")
    if n > 63:
        raise SearchLimitError("orderly generation supports at most 63 vertices")


def _feasible_rest(degs: list[int], n: int, k: int, m: int) -> bool:
    """Can the graph on m vertices be completed to a k-regular graph on n?"""
    r = n - m
    deficit = 0
    for d in degs:
        need = k - d
        if need < 0 or need > r:
            return False
        deficit += need
    rest = r * k - deficit  # twice the number of edges among the future vertices
    return rest >= 0 and rest % 2 == 0 and rest <= r * (r - 1)


def enumerate_regular(n: int, k: int) -> Iterator[Graph]:
    """Yield one canonical representative of every k-regular graph on n
    vertices (connected or not), in a deterministic order."""
    _check_args(n, k)
    canonical = kernels.is_max_canonical
    rows = [0] * n
    degs = [0] * n
    words = [0] * n

    def extend(m: int) -> Iterator[Graph]:
        # vertices 0..m-1 are placed; add vertex m
        if m == n:
            yield Graph(n, tuple(rows), f"{k}-regular({n})")
            return
        r = n - m - 1  # vertices still to come after this one
        forced, optional = [], []
        for i in range(m):
            need = k - degs[i]
            if need == 0:
                continue
            if need > r:
                forced.append(i)
            else:
                optional.append(i)
        lo = max(0, k - r - len(forced))
        hi = min(k - len(forced), len(optional))
        for size in range(hi, lo - 1, -1):
            for extra in combinations(optional, size):
                nbrs = forced + list(extra)
                word = 0
                for i in nbrs:
                    word |= 1 << (m - 1 - i)  # row 0 is the most significant bit
                if m >= 2 and (word >> 1) > words[m - 1]:
                    continue  # swapping the last two vertices would give a larger string
                for i in nbrs:
                    rows[i] |= 1 << m
                    degs[i] += 1
                rows[m] = sum(1 << i for i in nbrs)
                degs[m] = len(nbrs)
                words[m] = word
                if _feasible_rest(degs[:m + 1], n, k, m + 1) and canonical(rows, m + 1):
                    yield from extend(m + 1)
                for i in nbrs:
                    rows[i] &= ~(1 << m)
                    degs[i] -= 1
                rows[m] = 0
                degs[m] = 0

    yield from extend(0)


def search_co_edge_regular(n: int, k: int, c: int) -> list[Graph]:
    """All co-edge-regular graphs with parameters (n, k, c), one per
    isomorphism class, sorted by graph6 text."""
    from .io import encode_graph6

    out = []
    for g in enumerate_regular(n, k):
        params = co_edge_regular_params(g)
        if not isinstance(params, Witness) and params == (n, k, c):
            out.append(g.with_label(f"coedge({n},{k},{c})"))
    out.sort(key=encode_graph6)
    return out

