"""Acceptance suite.  Each criterion prints one status line; the lines are
collected again in the terminal summary under "acceptance criteria"."""

import io
import random
import sys
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coedge.cli import main
from coedge.fixtures import fixture_graphs
from coedge.generate import search_co_edge_regular
from coedge.graph import (
    Graph,
    a_xy,
    complete_graph,
    cycle_graph,
    grid_graph,
    induced_subgraph,
    is_connected,
    petersen_graph,
    s_clique_extension,
    shrikhande_graph,
)
from coedge.io import encode_graph6, parse_graph6
from coedge.pipeline import (
    Grid,
    HypothesesNotMet,
    Shrikhande,
    check_nonexistence_windows,
    classify_theorem_1_3,
    verify_theorem_4_1,
)
from coedge.polynomial import ExactPolynomial, alg_cmp, alg_cmp_rational
from coedge.recognize import is_isomorphic, recognize_grid
from coedge.regularity import (
    Witness,
    co_edge_regular_params,
    ell_from_spectrum,
    heavy_neighbours,
    is_walk_regular,
    moment_identities,
    srg_eigen_data,
    strongly_co_edge_regular_ell,
    strongly_regular_params,
    theorem12_ell,
)
from coedge.search import cone_pattern, max_clique
from coedge.spectra import (
    Cmp,
    bareiss_det,
    cmp_min_eigenvalue,
    coarsest_equitable_refinement,
    hoffman_residual,
    interlaces,
    quotient_matrix,
    quotient_spectrum_subset,
    spectrum,
)

from .conftest import random_relabel

GRID_PAIRS = [(p, q) for p in range(3, 13) for q in range(2, p)]
# ℓ = k - 2 falls below 3k/4 exactly when k = p + q - 2 < 8
SMALL_GRIDS = [(p, q) for p, q in GRID_PAIRS if p + q - 2 < 8]

# regression baseline for search_co_edge_regular(10, 5, 2), sorted graph6:
# the 2-clique extension of C5, then grid(5,2)
SEARCH_10_5_2 = ["I~rH`cNBw", "I~}AHKVBw"]


def witness_graphs():
    return [grid_graph(p, q) for p, q in GRID_PAIRS] + [
        s_clique_extension(cycle_graph(5), 2),
        s_clique_extension(petersen_graph(), 2),
    ]


# 1 -----------------------------------------------------------------------------------------


def test_c1_grid_family(acceptance):
    with acceptance.criterion("1", "grid family 2 <= q < p <= 12", 60) as info:
        for p, q in GRID_PAIRS:
            g = grid_graph(p, q)
            k = p + q - 2
            assert is_connected(g)
            assert co_edge_regular_params(g) == (p * q, k, 2)
            assert is_walk_regular(g).holds
            assert strongly_co_edge_regular_ell(g) == k - 2
            spec = spectrum(g)
            assert spec.distinct_count == 4
            assert spec.rational_items() == [(k, 1), (p - 2, q - 1), (q - 2, p - 1), (-2, (p - 1) * (q - 1))]
            verdict = classify_theorem_1_3(g)
            assert not verdict.violated, verdict
            if (p, q) in SMALL_GRIDS:
                assert isinstance(verdict.outcome, HypothesesNotMet), verdict
            else:
                assert verdict.outcome == Grid(p, q)
                assert verdict.outcome.p + verdict.outcome.q == k + 2
        info["status"] = "PARTIAL"
        info["note"] = (f"Grid(p,q) for all {len(GRID_PAIRS) - len(SMALL_GRIDS)} pairs with k >= 8; "
                        f"the {len(SMALL_GRIDS)} pairs with k < 8 have ell < 3k/4 and are reported as "
                        "hypotheses not met")


@pytest.mark.xfail(strict=True, reason="k < 8 gives ell = k-2 < 3k/4, so the classifier reports hypotheses not met")
@pytest.mark.parametrize("p,q", SMALL_GRIDS)
def test_c1_small_grids_literal_claim(p, q):
    assert classify_theorem_1_3(grid_graph(p, q)).outcome == Grid(p, q)


@pytest.mark.parametrize("p,q", SMALL_GRIDS)
def test_c1_small_grids_fail_the_ell_bound(p, q):
    g = grid_graph(p, q)
    k = p + q - 2
    assert 4 * (k - 2) < 3 * k
    outcome = classify_theorem_1_3(g).outcome
    assert isinstance(outcome, HypothesesNotMet)
    assert any("3k/4" in r for r in outcome.reasons), outcome


# 2 -----------------------------------------------------------------------------------------


def test_c2_clique_extension_witnesses(acceptance):
    with acceptance.criterion("2", "2-clique extensions of C5 and Petersen", 5):
        g = s_clique_extension(cycle_graph(5), 2)
        assert co_edge_regular_params(g) == (10, 5, 2)
        spec = spectrum(g)
        assert spec.distinct_count == 4
        x2_5 = ExactPolynomial((-5, 0, 1))
        assert spec.theta_min.minimal_polynomial() == x2_5
        assert x2_5.divides(spec.charpoly)
        assert alg_cmp_rational(spec.theta_min, -2) < 0 < alg_cmp_rational(spec.theta_min, -3)

        h = s_clique_extension(petersen_graph(), 2)
        assert co_edge_regular_params(h) == (20, 7, 2)
        spec = spectrum(h)
        assert spec.distinct_count == 4
        assert spec.theta_min.exact and spec.theta_min.value == -3


# 3 -----------------------------------------------------------------------------------------


def test_c3_spectral_ell_and_hoffman(acceptance):
    with acceptance.criterion("3", "spectral ell and the cubic identity", 60):
        for g in witness_graphs():
            ell = strongly_co_edge_regular_ell(g)
            assert not isinstance(ell, Witness)
            assert ell_from_spectrum(g, 2) == ell
            assert theorem12_ell(g) == ell
            rep = hoffman_residual(g)
            assert rep.holds and rep.max_abs_residual == 0 and rep.first_nonzero is None


# 4 -----------------------------------------------------------------------------------------


def test_c4_cone_determinant_law(acceptance):
    with acceptance.criterion("4", "det(Q+3I) law for C(2K_s + tK_1)", 30) as info:
        less = 0
        for s in range(1, 7):
            for t in range(1, 13):
                g = cone_pattern(s, t)
                apex = 2 * s + t
                part = [[apex], list(range(2 * s)), list(range(2 * s, 2 * s + t))]
                q = quotient_matrix(g, part)
                assert q.entries == ((0, 2 * s, t), (1, s - 1, 0), (1, 0, 0))
                shifted = [[e + (3 if i == j else 0) for j, e in enumerate(row)] for i, row in enumerate(q.entries)]
                det = bareiss_det(shifted)
                assert det == -(s + 2) * (t - 3) + 12
                cmp = cmp_min_eigenvalue(g, -3)
                if det < 0:
                    assert cmp == Cmp.LESS
                # the converse also holds on this range: no extra constraint is ever needed
                assert (cmp == Cmp.LESS) == (det < 0)
                assert (cmp == Cmp.EQUAL) == (det == 0)
                less += cmp == Cmp.LESS
        info["note"] = f"{less} of 72 cones below -3"


# 5 -----------------------------------------------------------------------------------------


def test_c5_parameter_twins(acceptance):
    with acceptance.criterion("5", "Shrikhande versus the 4x4 grid", 10):
        sh, gr = shrikhande_graph(), grid_graph(4, 4)
        assert strongly_regular_params(sh) == (16, 6, 2, 2)
        assert strongly_regular_params(gr) == (16, 6, 2, 2)
        assert recognize_grid(sh) is None
        rec = recognize_grid(gr)
        assert rec is not None and (rec.p, rec.q) == (4, 4)
        assert not is_isomorphic(sh, gr)
        assert verify_theorem_4_1(sh).outcome == Shrikhande()
        assert verify_theorem_4_1(gr).outcome == Grid(4, 4)


# 6 -----------------------------------------------------------------------------------------


def test_c6_srg_closed_forms(acceptance):
    with acceptance.criterion("6", "SRG eigenvalues and multiplicities", 5):
        for params, g, expected in [
            ((10, 3, 0, 1), petersen_graph(), (1, -2, 5, 4)),
            ((16, 6, 2, 2), shrikhande_graph(), (2, -2, 6, 9)),
        ]:
            data = srg_eigen_data(*params)
            got = (data.theta.value, data.tau.value, data.m_theta, data.m_tau)
            assert got == expected
            assert data.trace_ok
            k = params[1]
            assert spectrum(g).rational_items() == [(k, 1), (expected[0], expected[2]), (expected[1], expected[3])]


# 7 -----------------------------------------------------------------------------------------


def test_c7_search_witness(acceptance):
    with acceptance.criterion("7", "exhaustive search for (10,5,2)", 600) as info:
        found = search_co_edge_regular(10, 5, 2)
        codes = [encode_graph6(g) for g in found]
        assert codes == SEARCH_10_5_2
        ext = s_clique_extension(cycle_graph(5), 2)
        assert any(is_isomorphic(g, ext) for g in found)
        assert any(is_isomorphic(g, grid_graph(5, 2)) for g in found)
        info["note"] = f"{len(found)} graphs: " + ", ".join(codes)


# 8 -----------------------------------------------------------------------------------------

FIXTURES = fixture_graphs()
NAMES = sorted(FIXTURES)
C2_POOL = [grid_graph(p, q) for p in range(2, 9) for q in range(2, p + 1)] + [
    shrikhande_graph(),
    s_clique_extension(cycle_graph(5), 2),
    s_clique_extension(petersen_graph(), 2),
]
COEDGE_NAMES = [n for n in NAMES if not isinstance(co_edge_regular_params(FIXTURES[n]), Witness)]
CASES = 200


def _run_suite(body) -> int:
    count = [0]

    @settings(max_examples=CASES)
    @given(st.integers(0, 2 ** 32))
    def run(seed):
        count[0] += 1
        body(random.Random(seed))

    run()
    return count[0]


def _random_subgraph(rng):
    g = FIXTURES[rng.choice(NAMES)]
    size = rng.randint(1, g.n)
    return g, induced_subgraph(g, sorted(rng.sample(range(g.n), size)))


def _interlacing(rng):
    g, h = _random_subgraph(rng)
    assert interlaces(spectrum(g), spectrum(h))


def _quotient(rng):
    g = FIXTURES[rng.choice(NAMES)]
    cells = rng.randint(1, 4)
    labels = [rng.randrange(cells) for _ in range(g.n)]
    start = [[v for v in range(g.n) if labels[v] == c] for c in range(cells)]
    part = coarsest_equitable_refinement(g, [c for c in start if c])
    q = quotient_matrix(g, part)
    assert quotient_spectrum_subset(q, g)


def _moments(rng):
    g = random_relabel(rng, FIXTURES[rng.choice(COEDGE_NAMES)])
    rep = moment_identities(g)
    assert rep.holds, rep
    k = g.degree(0)
    for x in range(g.n):
        nbrs = g.neighbors(x)
        assert rep.sum_a[x] == sum(a_xy(g, x, y) for y in nbrs)
        assert rep.sum_a_sq[x] == sum(a_xy(g, x, y) ** 2 for y in nbrs)
    if rep.walk_regular:
        assert rep.vertex_independent
    assert k == len(g.neighbors(0))


def _w_clique(rng):
    g = random_relabel(rng, rng.choice(C2_POOL))
    x = rng.randrange(g.n)
    k = g.degree(x)
    w = heavy_neighbours(g, x)
    assert set(w) == {y for y in g.neighbors(x) if 2 * a_xy(g, x, y) >= k}
    for u, v in combinations(w, 2):
        assert g.has_edge(u, v)


def _large_clique(rng):
    g = random_relabel(rng, rng.choice(C2_POOL))
    n, k, c = co_edge_regular_params(g)
    ell = strongly_co_edge_regular_ell(g)
    omega, clique = max_clique(g)
    assert all(g.has_edge(u, v) for u, v in combinations(clique, 2))
    if 2 * omega > ell + 4:
        assert ell == k - 2


def _monotone(rng):
    g, h = _random_subgraph(rng)
    assert alg_cmp(spectrum(h).theta_min, spectrum(g).theta_min) >= 0


SUITES = [
    ("interlacing", _interlacing),
    ("quotient spectrum", _quotient),
    ("moment identities", _moments),
    ("W is a clique", _w_clique),
    ("large clique forces ell = k-2", _large_clique),
    ("theta_min monotone", _monotone),
]


def test_c8_property_suites(acceptance):
    with acceptance.criterion("8", "property suites over fixtures", 120) as info:
        counts = []
        for name, body in SUITES:
            done = _run_suite(body)
            assert done >= CASES, f"{name}: only {done} cases ran"
            counts.append(f"{name} {done}")
        info["note"] = ", ".join(counts)


# 9 -----------------------------------------------------------------------------------------


def test_c9_nonexistence_windows(acceptance, capsys, monkeypatch):
    with acceptance.criterion("9", "no window violations on fixtures and search output", 60) as info:
        graphs = list(FIXTURES.values()) + search_co_edge_regular(10, 5, 2)
        codes = set()
        for g in graphs:
            w = check_nonexistence_windows(g)
            assert not w.violated, w
            monkeypatch.setattr(sys, "stdin", io.StringIO(encode_graph6(g) + "\n"))
            try:
                code = main(["classify", "--theorem", "windows"])
            except SystemExit as exc:
                code = exc.code
            capsys.readouterr()
            codes.add(code)
        assert 2 not in codes
        info["note"] = f"{len(graphs)} graphs, exit codes {sorted(codes)}"


# 10 ----------------------------------------------------------------------------------------


def test_c10_graph6_codec(acceptance):
    with acceptance.criterion("10", "graph6 roundtrip", 10):
        rng = random.Random(20261017)
        for _ in range(1000):
            n = rng.randint(0, 40)
            bits = rng.getrandbits(n * (n - 1) // 2) if n > 1 else 0
            edges = [e for i, e in enumerate(combinations(range(n), 2)) if bits >> i & 1]
            g = Graph.from_edges(n, edges)
            assert parse_graph6(encode_graph6(g)) == g
        for g in FIXTURES.values():
            assert parse_graph6(encode_graph6(g)) == g
        assert parse_graph6("Bw") == complete_graph(3)
        assert encode_graph6(complete_graph(3)) == "Bw"
