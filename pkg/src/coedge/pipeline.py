"""Mechanical checks of the grid characterizations on concrete graphs.

Each classifier evaluates the hypotheses in a fixed order (connected,
regular, c, eigenvalue count or walk-regularity, ℓ, branch conditions),
recording every step in a trail, and stops at the first failure.  When the
hypotheses hold, the stated conclusion is checked; a graph that meets the
hypotheses but not the conclusion yields ``ConclusionViolated``, which can
only mean a bug here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, components, cycle_graph, s_clique_extension
from .recognize import is_isomorphic, is_shrikhande, recognize_grid
from .regularity import (
    Witness,
    co_edge_regular_params,
    is_walk_regular,
    strongly_co_edge_regular_ell,
    theorem12_ell,
)
from .search import has_induced_quadrangle
from .spectra import Cmp, cmp_min_eigenvalue, distinct_eigenvalue_count

LARGE_K = 120


# outcomes ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Grid:
    p: int
    q: int

    def __str__(self):
        return f"Grid({self.p},{self.q})"


@dataclass(frozen=True)
class TwoCliqueExtC5:
    def __str__(self):
        return "TwoCliqueExtC5"


@dataclass(frozen=True)
class Shrikhande:
    def __str__(self):
        return "Shrikhande"


@dataclass(frozen=True)
class HypothesesNotMet:
    reasons: tuple[str, ...]

    def __str__(self):
        return "HypothesesNotMet(" + "; ".join(self.reasons) + ")"


@dataclass(frozen=True)
class ConclusionViolated:
    evidence: tuple[str, ...]

    def __str__(self):
        return "ConclusionViolated(" + "; ".join(self.evidence) + ")"


@dataclass(frozen=True)
class TrailStep:
    check: str
    result: str
    witness: str = ""


@dataclass(frozen=True)
class ClassificationVerdict:
    theorem: str
    outcome: object
    trail: tuple[TrailStep, ...]

    @property
    def hypotheses_met(self) -> bool:
        return not isinstance(self.outcome, HypothesesNotMet)

    @property
    def violated(self) -> bool:
        return isinstance(self.outcome, ConclusionViolated)


class _Trail:
    def __init__(self):
        self.steps: list[TrailStep] = []

    def add(self, check: str, result, witness="") -> None:
        if isinstance(result, bool):
            result = "true" if result else "false"
        self.steps.append(TrailStep(check, str(result), str(witness) if witness else ""))

    def verdict(self, theorem: str, outcome) -> ClassificationVerdict:
        return ClassificationVerdict(theorem, outcome, tuple(self.steps))


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# shared hypothesis steps -------------------------------------------------------------


@dataclass
class _Facts:
    n: int = 0
    k: int = 0
    ell: int | None = None
    notes: list[str] = field(default_factory=list)


def _basic_steps(g: Graph, trail: _Trail, facts: _Facts) -> str | None:
    """connected -> regular -> co-edge-regular with c = 2.  Returns the
    first failure reason or None."""
    if g.n == 0:
        trail.add("nonempty", False)
        return "graph has no vertices"
    conn = len(components(g)) == 1
    trail.add("connected", conn, "" if conn else f"{len(components(g))} components")
    if not conn:
        return "not connected"
    degs = g.degrees()
    regular = len(set(degs)) == 1
    bad = next((v for v, d in enumerate(degs) if d != degs[0]), None)
    trail.add("regular", regular, "" if regular else f"deg({bad})={degs[bad]} != deg(0)={degs[0]}")
    if not regular:
        return "not regular"
    facts.n, facts.k = g.n, degs[0]
    params = co_edge_regular_params(g)
    if isinstance(params, Witness):
        trail.add("co-edge-regular", False, params)
        return f"not co-edge-regular ({params.kind})"
    c = params[2]
    trail.add("co-edge-regular", f"(n,k,c)=({params[0]},{params[1]},{c})")
    if c != 2:
        trail.add("c == 2", False, f"c={c}")
        return f"c = {c} != 2"
    trail.add("c == 2", True)
    return None


def _combinatorial_ell(g: Graph, trail: _Trail, facts: _Facts) -> str | None:
    ell = strongly_co_edge_regular_ell(g)
    if isinstance(ell, Witness):
        trail.add("strongly co-edge-regular", False, ell)
        return f"not strongly co-edge-regular ({ell})"
    facts.ell = ell
    trail.add("strongly co-edge-regular", f"ell={ell}")
    return None


def _walk_regular(g: Graph, trail: _Trail) -> str | None:
    wr = is_walk_regular(g)
    if not wr.holds:
        r, x, y = wr.witness
        trail.add("walk-regular", False, f"diag(A^{r}) differs at {x},{y}")
        return "not walk-regular"
    trail.add("walk-regular", True, f"checked powers < {wr.checked_up_to + 1}")
    return None


def _grid_conclusion(g: Graph, trail: _Trail, k: int, ell, strict: bool):
    """Grid with p + q = k + 2 and ℓ = k - 2 (and p > q when *strict*)."""
    rec = recognize_grid(g)
    if rec is None:
        trail.add("grid", False)
        return None
    ok = rec.p + rec.q == k + 2 and ell == k - 2 and (rec.p > rec.q or not strict)
    trail.add("grid", f"({rec.p},{rec.q})", f"p+q={rec.p + rec.q}, k+2={k + 2}, ell={_fmt(ell)}")
    return Grid(rec.p, rec.q) if ok else None


def _ext_c5(g: Graph, trail: _Trail) -> bool:
    hit = g.n == 10 and is_isomorphic(g, s_clique_extension(cycle_graph(5), 2))
    trail.add("2-clique extension of C5", hit)
    return hit


def _violation(trail: _Trail, theorem: str, what: str) -> ClassificationVerdict:
    trail.add("conclusion", False, what)
    return trail.verdict(theorem, ConclusionViolated((what,)))


# classifiers ---------------------------------------------------------------------------


def classify_theorem_1_2(g: Graph) -> ClassificationVerdict:
    """Four distinct eigenvalues with c = 2: branch (i) when the spectral ℓ
    is at least 3k/4, branch (ii) when theta_min >= -3 and k >= 120."""
    trail, facts = _Trail(), _Facts()
    reason = _basic_steps(g, trail, facts)
    if reason:
        return trail.verdict("T1.2", HypothesesNotMet((reason,)))
    count = distinct_eigenvalue_count(g)
    trail.add("four distinct eigenvalues", count == 4, f"{count} distinct")
    if count != 4:
        return trail.verdict("T1.2", HypothesesNotMet((f"{count} distinct eigenvalues, need 4",)))
    k = facts.k
    ell = theorem12_ell(g)
    trail.add("ell (spectral)", _fmt(ell))
    comb = strongly_co_edge_regular_ell(g)
    trail.add("ell (combinatorial)", comb if not isinstance(comb, Witness) else "undefined",
              comb if isinstance(comb, Witness) else "")
    if isinstance(comb, Witness) or comb != ell:
        return _violation(trail, "T1.2", f"spectral ell {_fmt(ell)} != combinatorial {comb}")
    branch_i = ell >= Fraction(3 * k, 4)
    trail.add("ell >= 3k/4", branch_i, f"ell={_fmt(ell)}, 3k/4={_fmt(Fraction(3 * k, 4))}")
    cmp = cmp_min_eigenvalue(g, -3)
    branch_ii = cmp != Cmp.LESS and k >= LARGE_K
    trail.add("theta_min >= -3", cmp != Cmp.LESS, f"theta_min {cmp.symbol} -3")
    trail.add(f"k >= {LARGE_K}", k >= LARGE_K, f"k={k}")
    if not branch_i and not branch_ii:
        reasons = [f"branch i: ell = {_fmt(ell)} < 3k/4 = {_fmt(Fraction(3 * k, 4))}"]
        if cmp == Cmp.LESS:
            reasons.append("branch ii: theta_min < -3")
        if k < LARGE_K:
            reasons.append(f"branch ii: k = {k} < {LARGE_K}")
        return trail.verdict("T1.2", HypothesesNotMet(tuple(reasons)))
    theorem = "T1.2i" if branch_i else "T1.2ii"
    grid = _grid_conclusion(g, trail, k, ell, strict=True)
    if grid is not None:
        return trail.verdict(theorem, grid)
    if branch_i and _ext_c5(g, trail):
        return trail.verdict(theorem, TwoCliqueExtC5())
    return _violation(trail, theorem, "neither a p x q grid (p > q) nor the 2-clique extension of C5")


def _walk_strong_steps(g: Graph, trail: _Trail, facts: _Facts) -> str | None:
    return (_basic_steps(g, trail, facts) or _walk_regular(g, trail)
            or _combinatorial_ell(g, trail, facts))


def classify_theorem_1_3(g: Graph) -> ClassificationVerdict:
    """Walk-regular, strongly co-edge-regular with c = 2 and ℓ >= 3k/4."""
    trail, facts = _Trail(), _Facts()
    reason = _walk_strong_steps(g, trail, facts)
    if reason:
        return trail.verdict("T1.3", HypothesesNotMet((reason,)))
    k, ell = facts.k, facts.ell
    ok = ell >= Fraction(3 * k, 4)
    trail.add("ell >= 3k/4", ok, f"ell={ell}, 3k/4={_fmt(Fraction(3 * k, 4))}")
    if not ok:
        return trail.verdict("T1.3", HypothesesNotMet(
            (f"ell = {ell} < 3k/4 = {_fmt(Fraction(3 * k, 4))}",)))
    grid = _grid_conclusion(g, trail, k, ell, strict=False)
    if grid is not None:
        return trail.verdict("T1.3", grid)
    if _ext_c5(g, trail):
        return trail.verdict("T1.3", TwoCliqueExtC5())
    return _violation(trail, "T1.3", "neither a p x q grid nor the 2-clique extension of C5")


def classify_theorem_1_4(g: Graph) -> ClassificationVerdict:
    """Walk-regular, strongly co-edge-regular with c = 2, theta_min >= -3 and
    k >= 120."""
    trail, facts = _Trail(), _Facts()
    reason = _walk_strong_steps(g, trail, facts)
    if reason:
        return trail.verdict("T1.4", HypothesesNotMet((reason,)))
    k, ell = facts.k, facts.ell
    cmp = cmp_min_eigenvalue(g, -3)
    trail.add("theta_min >= -3", cmp != Cmp.LESS, f"theta_min {cmp.symbol} -3")
    trail.add(f"k >= {LARGE_K}", k >= LARGE_K, f"k={k}")
    reasons = []
    if cmp == Cmp.LESS:
        reasons.append("theta_min < -3")
    if k < LARGE_K:
        reasons.append(f"k = {k} < {LARGE_K}")
    if reasons:
        return trail.verdict("T1.4", HypothesesNotMet(tuple(reasons)))
    grid = _grid_conclusion(g, trail, k, ell, strict=False)
    if grid is not None:
        return trail.verdict("T1.4", grid)
    return _violation(trail, "T1.4", "not a p x q grid with p + q = k + 2")


def verify_theorem_4_1(g: Graph) -> ClassificationVerdict:
    """Walk-regular, strongly co-edge-regular with parameters (n, k, 2, k-2)
    and an induced quadrangle: must be the Shrikhande graph or a grid."""
    trail, facts = _Trail(), _Facts()
    reason = _walk_strong_steps(g, trail, facts)
    if reason:
        return trail.verdict("T4.1", HypothesesNotMet((reason,)))
    k, ell = facts.k, facts.ell
    trail.add("ell == k-2", ell == k - 2, f"ell={ell}, k-2={k - 2}")
    if ell != k - 2:
        return trail.verdict("T4.1", HypothesesNotMet((f"ell = {ell} != k - 2 = {k - 2}",)))
    quad = has_induced_quadrangle(g)
    trail.add("induced quadrangle", quad is not None, quad or "")
    if quad is None:
        return trail.verdict("T4.1", HypothesesNotMet(("no induced quadrangle",)))
    if g.n == 16 and is_shrikhande(g):
        trail.add("Shrikhande", True)
        return trail.verdict("T4.1", Shrikhande())
    grid = _grid_conclusion(g, trail, k, ell, strict=False)
    if grid is not None:
        return trail.verdict("T4.1", grid)
    return _violation(trail, "T4.1", "neither the Shrikhande graph nor a p x q grid")


@dataclass(frozen=True)
class WindowsVerdict:
    quadrangle_window: ClassificationVerdict  # 3k/4 <= ℓ <= k-3 with an induced quadrangle
    large_k_window: ClassificationVerdict  # theta_min >= -3, k >= 120, ℓ < 3k/4

    @property
    def violated(self) -> bool:
        return self.quadrangle_window.violated or self.large_k_window.violated

    @property
    def verdicts(self) -> tuple[ClassificationVerdict, ClassificationVerdict]:
        return self.quadrangle_window, self.large_k_window


def check_nonexistence_windows(g: Graph) -> WindowsVerdict:
    """No strongly co-edge-regular graph with c = 2 may fall in either
    excluded window; a graph that does is reported as ConclusionViolated."""
    trail, facts = _Trail(), _Facts()
    reason = _basic_steps(g, trail, facts) or _combinatorial_ell(g, trail, facts)
    if reason:
        hnm = trail.verdict("T4.2", HypothesesNotMet((reason,)))
        return WindowsVerdict(hnm, ClassificationVerdict("T4.3", hnm.outcome, hnm.trail))
    k, ell = facts.k, facts.ell
    base = list(trail.steps)

    t2 = _Trail()
    t2.steps = list(base)
    lo, hi = Fraction(3 * k, 4), k - 3
    in_window = lo <= ell <= hi
    t2.add("3k/4 <= ell <= k-3", in_window, f"ell={ell}, window=[{_fmt(lo)}, {hi}]")
    quad = has_induced_quadrangle(g)
    t2.add("induced quadrangle", quad is not None, quad or "")
    if in_window and quad is not None:
        v42 = _violation(t2, "T4.2", f"ell = {ell} inside [{_fmt(lo)}, {hi}] with an induced quadrangle")
    else:
        reasons = []
        if not in_window:
            reasons.append(f"ell = {ell} outside [{_fmt(lo)}, {hi}]")
        if quad is None:
            reasons.append("no induced quadrangle")
        v42 = t2.verdict("T4.2", HypothesesNotMet(tuple(reasons)))

    t3 = _Trail()
    t3.steps = list(base)
    cmp = cmp_min_eigenvalue(g, -3)
    t3.add("theta_min >= -3", cmp != Cmp.LESS, f"theta_min {cmp.symbol} -3")
    t3.add(f"k >= {LARGE_K}", k >= LARGE_K, f"k={k}")
    small_ell = ell < Fraction(3 * k, 4)
    t3.add("ell < 3k/4", small_ell, f"ell={ell}")
    if cmp != Cmp.LESS and k >= LARGE_K and small_ell:
        v43 = _violation(t3, "T4.3", f"theta_min >= -3, k = {k}, ell = {ell} < 3k/4")
    else:
        reasons = []
        if cmp == Cmp.LESS:
            reasons.append("theta_min < -3")
        if k < LARGE_K:
            reasons.append(f"k = {k} < {LARGE_K}")
        if not small_ell:
            reasons.append(f"ell = {ell} >= 3k/4")
        v43 = t3.verdict("T4.3", HypothesesNotMet(tuple(reasons)))
    return WindowsVerdict(v42, v43)
