"""Regularity classes: co-edge-regular, strongly co-edge-regular, walk-regular,
strongly regular and Terwilliger, with exact witnesses on failure.

Every check scans vertices or pairs in lexicographic order and the first value
seen is the reference, so a failure witness is always the lexicographically
least offending vertex or pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graph import Graph, GraphError, _bits, is_connected
from .polynomial import ExactPolynomial, RootInterval, isolate_real_roots
from .spectra import _exact_matmul, cubic_factor, minimal_polynomial


@dataclass(frozen=True)
class Witness:
    """Why a regularity property fails: *observed* at *vertices* differs
    from *expected* (the value taken at the first vertex or pair)."""

    kind: str
    vertices: tuple[int, ...]
    observed: object = None
    expected: object = None

    def __str__(self):
        where = ",".join(map(str, self.vertices))
        if self.observed is None:
            return f"{self.kind}({where})"
        return f"{self.kind} at ({where}): observed {self.observed}, expected {self.expected}"


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("analysis needs at least one vertex")


def _matrices(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    a = g.adjacency_matrix()
    return a, a @ a


def _nonadjacent_mask(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    return np.triu((a == 0) & ~np.eye(n, dtype=bool), 1)


def _first_deviation(values: np.ndarray, mask: np.ndarray):
    """``(reference, None)`` or ``(reference, (i, j, observed))`` for the first
    masked entry (row-major) that differs from the first masked entry."""
    idx = np.argwhere(mask)
    if len(idx) == 0:
        return None, None
    ref = int(values[tuple(idx[0])])
    bad = np.argwhere(mask & (values != ref))
    if len(bad) == 0:
        return ref, None
    i, j = (int(v) for v in bad[0])
    return ref, (i, j, int(values[i, j]))


def _regular_witness(g: Graph) -> Witness | None:
    degs = g.degrees()
    for v, d in enumerate(degs):
        if d != degs[0]:
            return Witness("nonregular", (v,), d, degs[0])
    return None


def co_edge_regular_params(g: Graph) -> tuple[int, int, int] | Witness:
    """``(n, k, c)`` when *g* is co-edge-regular, otherwise a witness."""
    _require_vertices(g)
    w = _regular_witness(g)
    if w is not None:
        return w
    if g.is_complete():
        return Witness("complete", ())
    if g.is_empty():
        return Witness("empty", ())
    a, a2 = _matrices(g)
    c, bad = _first_deviation(a2, _nonadjacent_mask(a))
    if bad is not None:
        i, j, obs = bad
        return Witness("c-nonconstant", (i, j), obs, c)
    return g.n, g.degree(0), c


def strongly_co_edge_regular_ell(g: Graph) -> int | Witness:
    """ℓ such that ``sum_{y ~ x, y ~ z} a_xy = ℓ`` for all nonadjacent x != z."""
    params = co_edge_regular_params(g)
    if isinstance(params, Witness):
        return params
    a, a2 = _matrices(g)
    ell_matrix = (a * a2) @ a  # (A∘A²)A: entry (x, z) sums a_xy over common neighbours y
    ell, bad = _first_deviation(ell_matrix, _nonadjacent_mask(a))
    if bad is not None:
        i, j, obs = bad
        return Witness("ell-nonconstant", (i, j), obs, ell)
    return ell


@dataclass(frozen=True)
class WalkRegularity:
    holds: bool
    checked_up_to: int
    witness: tuple[int, int, int] | None = None  # (r, x, y): diag(A^r) differs at x and y


def is_walk_regular(g: Graph) -> WalkRegularity:
    """Decide walk-regularity exactly.

    Powers ``A^r`` for ``r >= d`` (d the degree of the minimal polynomial) are
    combinations of lower powers, so checking ``r < d`` suffices.
    """
    _require_vertices(g)
    d = minimal_polynomial(g).degree
    a = g.adjacency_matrix()
    power = np.eye(g.n, dtype=np.int64)
    for r in range(1, d):
        power = _exact_matmul(power, a)
        diag = [int(v) for v in np.diagonal(power)]
        for x, v in enumerate(diag):
            if v != diag[0]:
                return WalkRegularity(False, r, (r, 0, x))
    return WalkRegularity(True, d - 1)


def strongly_regular_params(g: Graph) -> tuple[int, int, int, int] | Witness:
    """``(n, k, a, c)`` for a strongly regular graph, otherwise a witness."""
    _require_vertices(g)
    w = _regular_witness(g)
    if w is not None:
        return w
    if g.is_complete():
        return Witness("complete", ())
    if g.is_empty():
        return Witness("empty", ())
    a, a2 = _matrices(g)
    lam, bad = _first_deviation(a2, np.triu(a == 1, 1))
    if bad is not None:
        i, j, obs = bad
        return Witness("a-nonconstant", (i, j), obs, lam)
    mu, bad = _first_deviation(a2, _nonadjacent_mask(a))
    if bad is not None:
        i, j, obs = bad
        return Witness("c-nonconstant", (i, j), obs, mu)
    return g.n, g.degree(0), lam, mu


def is_terwilliger(g: Graph) -> tuple[bool, int | None] | Witness:
    """``(True, c)`` when every distance-2 pair has a common neighbourhood that
    is a clique of one fixed size c (``c`` is None when there are no such
    pairs); otherwise a witness."""
    _require_vertices(g)
    if g.is_complete():
        raise GraphError("Terwilliger property needs a non-complete graph")
    size = None
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            common = _bits(g.rows[x] & g.rows[y])
            if not common:
                continue
            for i, u in enumerate(common):
                for v in common[i + 1:]:
                    if not g.has_edge(u, v):
                        return Witness("common-neighbourhood-not-clique", (x, y, u, v))
            if size is None:
                size = len(common)
            elif len(common) != size:
                return Witness("clique-size-nonconstant", (x, y), len(common), size)
    return True, size


# closed forms ----------------------------------------------------------------------


class InfeasibleParameters(ValueError):
    """Parameter tuple cannot belong to a strongly regular graph."""


@dataclass(frozen=True)
class SrgEigenData:
    theta: RootInterval
    tau: RootInterval
    m_theta: int
    m_tau: int
    conference: bool
    discriminant: int
    trace_ok: bool


def _is_square(d: int) -> bool:
    return d >= 0 and math.isqrt(d) ** 2 == d


def is_conference_tuple(n: int, k: int, a: int, c: int) -> bool:
    return c >= 1 and (n, k, a) == (4 * c + 1, 2 * c, c - 1)


def srg_eigen_data(n: int, k: int, a: int, c: int) -> SrgEigenData:
    """Nontrivial eigenvalues and multiplicities of an SRG(n, k, a, c)."""
    if not (k >= c >= 0 and k >= 1):
        raise InfeasibleParameters("need k >= c >= 0 and k >= 1")
    if k * (k - a - 1) != (n - k - 1) * c:
        raise InfeasibleParameters(f"counting identity fails: {k}({k}-{a}-1) != ({n}-{k}-1){c}")
    b = a - c
    disc = b * b + 4 * (k - c)
    num = 2 * k + (n - 1) * b
    if _is_square(disc):
        root = math.isqrt(disc)
        if num % root or (n - 1 + num // root) % 2:
            raise InfeasibleParameters("multiplicities are not integers")
        diff = num // root
        theta = RootInterval.rational(Fraction(b + root, 2))
        tau = RootInterval.rational(Fraction(b - root, 2))
    else:
        if num != 0 or (n - 1) % 2:
            raise InfeasibleParameters("irrational eigenvalues need equal multiplicities")
        diff = 0
        tau, theta = isolate_real_roots(ExactPolynomial((-(k - c), -b, 1)))
    m_theta, m_tau = (n - 1 - diff) // 2, (n - 1 + diff) // 2
    if min(m_theta, m_tau) < 0:
        raise InfeasibleParameters("negative multiplicity")
    # trace: k + m_theta*theta + m_tau*tau = rational + irrational * sqrt(disc) / 2
    rational_part = Fraction(2 * k + (m_theta + m_tau) * b, 2)
    irrational_part = Fraction(m_theta - m_tau, 2)
    if _is_square(disc):
        trace_ok = rational_part + irrational_part * math.isqrt(disc) == 0
    else:
        trace_ok = rational_part == 0 and irrational_part == 0
    return SrgEigenData(theta, tau, m_theta, m_tau, is_conference_tuple(n, k, a, c), disc, trace_ok)


def ell_from_spectrum(g: Graph, c: int) -> Fraction:
    """ℓ read off the spectrum of a connected regular graph with four distinct
    eigenvalues: ``c * sum(theta_i) + gv(k) / n - (k - c) c``."""
    k, gv = cubic_factor(g)
    sum_theta = -gv.coeffs[2]
    return Fraction(c * sum_theta) + Fraction(gv(k), g.n) - (k - c) * c


def theorem12_ell(g: Graph) -> Fraction:
    """The four-eigenvalue expression ``2 sum(theta_i) + prod(k - theta_i) / n - 2(k - 2)``."""
    k, gv = cubic_factor(g)
    return 2 * Fraction(-gv.coeffs[2]) + Fraction(gv(k), g.n) - 2 * (k - 2)


# local counting identities ---------------------------------------------------------


@dataclass(frozen=True)
class MomentReport:
    holds: bool
    sum_a: tuple[int, ...]  # per vertex: sum of a_xy over neighbours y
    sum_a_sq: tuple[int, ...]
    walk_regular: bool
    vertex_independent: bool | None  # only decided for walk-regular inputs
    failures: tuple[Witness, ...] = field(default=())


def moment_identities(g: Graph) -> MomentReport | Witness:
    """Check ``(A^3)_xx = sum a_xy`` and ``(A^4)_xx = k^2 + sum a_xy^2 + (n-k-1)c^2``
    at every vertex, comparing direct counts with matrix powers."""
    params = co_edge_regular_params(g)
    if isinstance(params, Witness):
        return params
    n, k, c = params
    a = g.adjacency_matrix()
    a2 = a @ a
    a3 = a2 @ a
    a4 = a3 @ a
    sums, sq_sums, failures = [], [], []
    for x in range(n):
        counts = [(g.rows[x] & g.rows[y]).bit_count() for y in _bits(g.rows[x])]
        s1, s2 = sum(counts), sum(t * t for t in counts)
        sums.append(s1)
        sq_sums.append(s2)
        if int(a3[x, x]) != s1:
            failures.append(Witness("A3-diagonal", (x,), int(a3[x, x]), s1))
        expected = k * k + s2 + (n - k - 1) * c * c
        if int(a4[x, x]) != expected:
            failures.append(Witness("A4-diagonal", (x,), int(a4[x, x]), expected))
    walk = is_walk_regular(g).holds
    indep = None
    if walk:
        indep = len(set(sums)) == 1 and len(set(sq_sums)) == 1
    holds = not failures and indep is not False
    return MomentReport(holds, tuple(sums), tuple(sq_sums), walk, indep, tuple(failures))


def heavy_neighbours(g: Graph, x: int) -> tuple[int, ...]:
    """Neighbours w of x with ``a_xw >= k / 2`` (exact comparison ``2 a_xw >= k``)."""
    k = g.degree(x)
    return tuple(w for w in _bits(g.rows[x]) if 2 * (g.rows[x] & g.rows[w]).bit_count() >= k)


# summary report ----------------------------------------------------------------------


@dataclass
class RegularityReport:
    n: int
    k: int | None = None
    c: int | None = None
    ell: int | None = None
    a: int | None = None
    flags: dict[str, bool] = field(default_factory=dict)
    witnesses: list[Witness] = field(default_factory=list)
    terwilliger_c: int | None = None


def regularity_report(g: Graph) -> RegularityReport:
    """Evaluate every regularity flag; each false flag carries a witness."""
    _require_vertices(g)
    rep = RegularityReport(n=g.n)
    flags = rep.flags
    flags["connected"] = is_connected(g)
    if not flags["connected"]:
        rep.witnesses.append(Witness("disconnected", ()))
    flags["complete"] = g.is_complete()
    flags["empty"] = g.is_empty()
    w = _regular_witness(g)
    flags["regular"] = w is None
    if w is None:
        rep.k = g.degree(0)
    else:
        rep.witnesses.append(w)

    cer = co_edge_regular_params(g)
    flags["co_edge_regular"] = not isinstance(cer, Witness)
    if isinstance(cer, Witness):
        if cer.kind != "nonregular":
            rep.witnesses.append(cer)
        flags["strongly_co_edge_regular"] = False
    else:
        rep.c = cer[2]
        ell = strongly_co_edge_regular_ell(g)
        flags["strongly_co_edge_regular"] = not isinstance(ell, Witness)
        if isinstance(ell, Witness):
            rep.witnesses.append(ell)
        else:
            rep.ell = ell

    walk = is_walk_regular(g)
    flags["walk_regular"] = walk.holds
    if not walk.holds:
        r, x, y = walk.witness
        rep.witnesses.append(Witness("walk-diagonal", (x, y), r))

    srg = strongly_regular_params(g)
    flags["strongly_regular"] = not isinstance(srg, Witness)
    if isinstance(srg, Witness):
        if srg.kind not in ("nonregular", "complete", "empty") or not rep.witnesses:
            rep.witnesses.append(srg)
    else:
        rep.a = srg[2]

    if flags["complete"]:
        flags["terwilliger"] = False
        rep.witnesses.append(Witness("complete", ()))
    else:
        ter = is_terwilliger(g)
        flags["terwilliger"] = not isinstance(ter, Witness)
        if isinstance(ter, Witness):
            rep.witnesses.append(ter)
        else:
            rep.terwilliger_c = ter[1]
    return rep
