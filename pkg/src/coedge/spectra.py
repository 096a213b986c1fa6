"""Exact spectra of graphs.

Characteristic polynomials are computed modulo word-sized primes by the
compiled (or fallback) Hessenberg kernel and lifted to Z by Chinese
remaindering against an a-priori coefficient bound, so the result is exact.
Multiplicities come from Yun's squarefree decomposition, never from numeric
clustering.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .graph import Graph, GraphError, _bits, _mask, is_connected
from .polynomial import (
    ExactPolynomial,
    RootInterval,
    X,
    alg_cmp,
    alg_cmp_rational,
    alg_equal,
    count_roots_below,
    isolate_real_roots,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
)


class SpectralPreconditionError(ValueError):
    """Input graph does not meet the hypotheses of a spectral operation."""


# characteristic polynomials ----------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 7, 61):  # deterministic below 4.7e9
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _prime_table(count: int = 400) -> tuple[int, ...]:
    out = []
    p = (1 << 31) - 1
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p -= 2
    return tuple(out)


def charpoly_of_matrix(matrix) -> ExactPolynomial:
    """Exact ``det(xI - M)`` of a square integer matrix."""
    rows = [[int(v) for v in row] for row in matrix]
    n = len(rows)
    if n == 0:
        raise SpectralPreconditionError("characteristic polynomial of an empty matrix")
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    radius = max(1, max(sum(abs(v) for v in r) for r in rows))
    # every eigenvalue has modulus <= radius, so |c_{n-i}| <= C(n, i) radius^i
    bound = max(math.comb(n, i) * radius ** i for i in range(n + 1))
    coeffs = [0] * (n + 1)
    modulus = 1
    for p in _prime_table():
        if modulus > 2 * bound:
            break
        res = kernels.charpoly_mod(rows, p)
        inv = pow(modulus % p, p - 2, p)
        for i in range(n + 1):
            t = (res[i] - coeffs[i]) * inv % p
            coeffs[i] += modulus * t
        modulus *= p
    else:  # pragma: no cover
        raise RuntimeError("ran out of CRT primes")
    half = modulus // 2
    return ExactPolynomial(c - modulus if c > half else c for c in coeffs)


@lru_cache(maxsize=1024)
def char_poly(g: Graph) -> ExactPolynomial:
    """Characteristic polynomial ``det(xI - A)`` of the adjacency matrix."""
    if g.n == 0:
        raise SpectralPreconditionError("graph has no vertices")
    return charpoly_of_matrix(g.adjacency_matrix().tolist())


def bareiss_det(matrix) -> int:
    """Fraction-free Gaussian elimination determinant (an independent check
    on :func:`charpoly_of_matrix`)."""
    a = [[int(v) for v in row] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# spectra -----------------------------------------------------------------------------


@dataclass
class Spectrum:
    charpoly: ExactPolynomial
    roots: list[tuple[RootInterval, int]]  # descending, pairwise disjoint

    @property
    def distinct_count(self) -> int:
        return len(self.roots)

    @property
    def n(self) -> int:
        return self.charpoly.degree

    @property
    def theta_min(self) -> RootInterval:
        return self.roots[-1][0]

    @property
    def theta_max(self) -> RootInterval:
        return self.roots[0][0]

    def eigenvalues(self) -> list[RootInterval]:
        """All eigenvalues with repetition, non-increasing."""
        return [r for r, m in self.roots for _ in range(m)]

    def multiplicity(self, value) -> int:
        for r, m in self.roots:
            if alg_cmp_rational(r, value) == 0:
                return m
        return 0

    def rational_items(self) -> list[tuple[Fraction, int]] | None:
        """``[(eigenvalue, multiplicity)]`` when every eigenvalue is rational."""
        if all(r.exact for r, _ in self.roots):
            return [(r.value, m) for r, m in self.roots]
        return None

    def same_as(self, other: "Spectrum") -> bool:
        if self.charpoly != other.charpoly or len(self.roots) != len(other.roots):
            return False
        return all(m1 == m2 and alg_equal(r1, r2)
                   for (r1, m1), (r2, m2) in zip(self.roots, other.roots))

    def __str__(self):
        return "{" + ", ".join(f"({r})^{m}" for r, m in self.roots) + "}"


def spectrum_of_poly(p: ExactPolynomial) -> Spectrum:
    items = []
    for q, mult in squarefree_decomposition(p):
        for r in isolate_real_roots(q):
            items.append((r, mult))
    items.sort(key=cmp_to_key(lambda a, b: alg_cmp(b[0], a[0])))
    return Spectrum(p, items)


@lru_cache(maxsize=1024)
def spectrum(g: Graph) -> Spectrum:
    return spectrum_of_poly(char_poly(g))


def distinct_eigenvalue_count(g: Graph) -> int:
    return squarefree_part(char_poly(g)).degree


def minimal_polynomial(g: Graph) -> ExactPolynomial:
    """Minimal polynomial of A; A is symmetric, so this is the squarefree part
    of the characteristic polynomial."""
    return squarefree_part(char_poly(g))


class Cmp(str, enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    @property
    def symbol(self) -> str:
        return {"Less": "<", "Equal": "==", "Greater": ">"}[self.value]


def cmp_min_eigenvalue(g: Graph, r) -> Cmp:
    """Exact trichotomy of the smallest eigenvalue against rational *r*."""
    r = Fraction(r)
    sq = minimal_polynomial(g)
    if count_roots_below(sq, r) > 0:
        return Cmp.LESS
    return Cmp.EQUAL if sq.sign_at(r) == 0 else Cmp.GREATER


def interlaces(parent: Spectrum, child: Spectrum) -> bool:
    """``eta_{n-m+i}(parent) <= eta_i(child) <= eta_i(parent)`` for all i."""
    n, m = parent.n, child.n
    if m > n:
        raise ValueError("child spectrum larger than parent")
    big = parent.eigenvalues()
    small = child.eigenvalues()
    for i in range(m):
        if alg_cmp(small[i], big[i]) > 0:
            return False
        if alg_cmp(big[n - m + i], small[i]) > 0:
            return False
    return True


# equitable partitions ---------------------------------------------------------------


def _check_partition(n: int, partition: Sequence[Sequence[int]]) -> list[list[int]]:
    cells = [sorted(int(v) for v in c) for c in partition]
    seen: set[int] = set()
    for c in cells:
        if not c:
            raise GraphError("partition has an empty cell")
        for v in c:
            if not 0 <= v < n or v in seen:
                raise GraphError(f"partition: bad or repeated vertex {v}")
            seen.add(v)
    if len(seen) != n:
        raise GraphError("partition does not cover every vertex")
    return cells


@dataclass(frozen=True)
class QuotientMatrix:
    partition: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class NotEquitable:
    vertex: int
    other_vertex: int
    cell: int
    target_cell: int
    counts: tuple[int, int]


def quotient_matrix(g: Graph, partition) -> QuotientMatrix | NotEquitable:
    cells = _check_partition(g.n, partition)
    masks = [_mask(c) for c in cells]
    entries = []
    for i, c in enumerate(cells):
        row = []
        for j, m in enumerate(masks):
            first = (g.rows[c[0]] & m).bit_count()
            for v in c[1:]:
                cnt = (g.rows[v] & m).bit_count()
                if cnt != first:
                    return NotEquitable(v, c[0], i, j, (cnt, first))
            row.append(first)
        entries.append(tuple(row))
    return QuotientMatrix(tuple(tuple(c) for c in cells), tuple(entries))


def refine_partition(rows: Sequence[int], cells: list[list[int]], active=None) -> list[list[int]]:
    """Coarsest equitable refinement of the ordered partition *cells*.

    Fragments of a split cell take its place in order of increasing
    neighbour count, so the output order depends only on the structure, not
    on vertex names.  *active* lists the cell positions to use as initial
    splitters (default: all).
    """
    cells = [sorted(c) for c in cells]
    queue: deque[list[int]] = deque()
    queued: set[int] = set()
    for idx in (range(len(cells)) if active is None else active):
        queue.append(cells[idx])
        queued.add(id(cells[idx]))
    while queue:
        w = queue.popleft()
        if id(w) not in queued:
            continue
        queued.discard(id(w))
        wmask = _mask(w)
        pos = 0
        while pos < len(cells):
            c = cells[pos]
            if len(c) == 1:
                pos += 1
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((rows[v] & wmask).bit_count(), []).append(v)
            if len(groups) == 1:
                pos += 1
                continue
            frags = [groups[k] for k in sorted(groups)]
            cells[pos:pos + 1] = frags
            if id(c) in queued:
                queued.discard(id(c))
                skip = None
            else:
                sizes = [len(f) for f in frags]
                skip = sizes.index(max(sizes))
            for i, f in enumerate(frags):
                if i != skip:
                    queue.append(f)
                    queued.add(id(f))
            pos += len(frags)
    return cells


def coarsest_equitable_refinement(g: Graph, partition=None) -> list[tuple[int, ...]]:
    cells = [list(range(g.n))] if partition is None else _check_partition(g.n, partition)
    if g.n == 0:
        return []
    return [tuple(c) for c in refine_partition(g.rows, cells)]


def quotient_charpoly(q: QuotientMatrix) -> ExactPolynomial:
    return charpoly_of_matrix(q.as_lists())


def quotient_spectrum_subset(q: QuotientMatrix, g: Graph) -> bool:
    """Every eigenvalue of the quotient is an eigenvalue of *g* (checked as
    divisibility of char(g) by the squarefree part of char(Q))."""
    again = quotient_matrix(g, q.partition)
    if not isinstance(again, QuotientMatrix) or again.entries != q.entries:
        raise ValueError("quotient matrix is not an equitable quotient of this graph")
    return squarefree_part(quotient_charpoly(q)).divides(char_poly(g))


# clique extensions -------------------------------------------------------------------


def clique_extension_spectrum(spec: Spectrum, s: int) -> Spectrum:
    """Spectrum of the s-clique extension: ``theta -> s(theta + 1) - 1`` plus
    ``(-1)^((s - 1) n)``."""
    if s < 1:
        raise ValueError("s must be positive")
    n = spec.n
    # char_ext(y) = (y + 1)^((s-1)n) * s^n * char((y - s + 1) / s)
    mapped = spec.charpoly.affine_substitute(1, 1 - s, s)
    charpoly = mapped * ExactPolynomial((1, 1)) ** ((s - 1) * n)
    items: list[tuple[RootInterval, int]] = []
    minus_one_mult = (s - 1) * n
    for r, m in spec.roots:
        if alg_cmp_rational(r, -1) == 0:
            minus_one_mult += m
            continue
        if r.exact:
            items.append((RootInterval.rational(s * r.value + s - 1), m))
        else:
            poly = r.poly.affine_substitute(1, 1 - s, s).primitive()
            items.append((RootInterval(poly, s * r.lo + s - 1, s * r.hi + s - 1), m))
    if minus_one_mult:
        items.append((RootInterval.rational(-1), minus_one_mult))
    items.sort(key=cmp_to_key(lambda a, b: alg_cmp(b[0], a[0])))
    return Spectrum(charpoly, items)


# four-eigenvalue identities ------------------------------------------------------


def _regular_degree(g: Graph) -> int:
    degs = set(g.degrees())
    if len(degs) != 1:
        raise SpectralPreconditionError("graph is not regular")
    return degs.pop()


def cubic_factor(g: Graph) -> tuple[int, ExactPolynomial]:
    """``(k, gv)`` where ``gv = minpoly / (x - k)`` for a connected k-regular
    graph with exactly four distinct eigenvalues."""
    if g.n == 0 or not is_connected(g):
        raise SpectralPreconditionError("graph must be connected")
    k = _regular_degree(g)
    mp = minimal_polynomial(g)
    if mp.degree != 4:
        raise SpectralPreconditionError(f"expected 4 distinct eigenvalues, found {mp.degree}")
    gv = mp.exact_div(X - k)
    assert gv is not None and gv.lc == 1
    return k, gv


def _exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * a.shape[1]
    if bound < 2 ** 62 and a.dtype != object and b.dtype != object:
        return a @ b
    return a.astype(object) @ b.astype(object)


@dataclass(frozen=True)
class HoffmanReport:
    holds: bool
    k: int
    n: int
    cubic: ExactPolynomial
    sum_theta: int
    sum_pairs: int
    prod_theta: int
    j_coefficient: Fraction
    nonzero_entries: int
    first_nonzero: tuple[int, int] | None
    max_abs_residual: Fraction


def hoffman_residual(g: Graph) -> HoffmanReport:
    """Check ``A^3 - e1 A^2 + e2 A - e3 I = (gv(k) / n) J`` exactly, where
    e1, e2, e3 are the elementary symmetric functions of the three
    non-principal eigenvalues and gv is their monic cubic."""
    k, gv = cubic_factor(g)
    c0, c1, c2, _ = gv.coeffs
    sum_theta, sum_pairs, prod_theta = -c2, c1, -c0
    n = g.n
    a = g.adjacency_matrix()
    a2 = _exact_matmul(a, a)
    a3 = _exact_matmul(a2, a)
    # scale by n so everything stays integral
    lhs = n * (a3 + c2 * a2 + c1 * a + c0 * np.eye(n, dtype=np.int64))
    res = lhs - gv(k)
    nz = np.argwhere(res != 0)
    first = (int(nz[0][0]), int(nz[0][1])) if len(nz) else None
    max_abs = Fraction(int(np.abs(res).max(initial=0)), n)
    return HoffmanReport(
        holds=len(nz) == 0,
        k=k,
        n=n,
        cubic=gv,
        sum_theta=sum_theta,
        sum_pairs=sum_pairs,
        prod_theta=prod_theta,
        j_coefficient=Fraction(gv(k), n),
        nonzero_entries=len(nz),
        first_nonzero=first,
        max_abs_residual=max_abs,
    )
