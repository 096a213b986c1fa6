from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given

from coedge.graph import (
    GraphError,
    a_xy,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    grid_graph,
    path_graph,
    petersen_graph,
    s_clique_extension,
    shrikhande_graph,
)
from coedge.polynomial import X, alg_cmp_rational
from coedge.regularity import (
    InfeasibleParameters,
    Witness,
    co_edge_regular_params,
    ell_from_spectrum,
    is_terwilliger,
    is_walk_regular,
    moment_identities,
    regularity_report,
    srg_eigen_data,
    strongly_co_edge_regular_ell,
    strongly_regular_params,
    theorem12_ell,
)
from coedge.spectra import spectrum

from .strategies import graphs

EXT_C5 = s_clique_extension(cycle_graph(5), 2)
EXT_PET = s_clique_extension(petersen_graph(), 2)


def _brute_ell(g):
    """Direct summation of a_xy over common neighbours, for every nonadjacent pair."""
    values = set()
    for x, z in combinations(range(g.n), 2):
        if g.has_edge(x, z):
            continue
        values.add(sum(a_xy(g, x, y) for y in range(g.n) if g.has_edge(x, y) and g.has_edge(z, y)))
    return values


def test_co_edge_regular_examples():
    assert co_edge_regular_params(cycle_graph(5)) == (5, 2, 1)
    assert co_edge_regular_params(grid_graph(3, 3)) == (9, 4, 2)
    w = co_edge_regular_params(path_graph(4))
    assert isinstance(w, Witness) and w.kind == "nonregular"
    assert co_edge_regular_params(complete_graph(4)).kind == "complete"
    assert co_edge_regular_params(empty_graph(4)).kind == "empty"
    w = co_edge_regular_params(disjoint_union(cycle_graph(5), cycle_graph(5)))
    assert w.kind == "c-nonconstant"
    with pytest.raises(GraphError):
        co_edge_regular_params(empty_graph(0))


def test_ell_examples():
    assert strongly_co_edge_regular_ell(grid_graph(4, 3)) == 3
    assert strongly_co_edge_regular_ell(EXT_C5) == 4
    assert strongly_co_edge_regular_ell(petersen_graph()) == 0
    for g in (grid_graph(4, 3), EXT_C5, EXT_PET, petersen_graph()):
        assert _brute_ell(g) == {strongly_co_edge_regular_ell(g)}


def test_walk_regular():
    assert is_walk_regular(grid_graph(4, 3)).holds
    assert is_walk_regular(EXT_C5).holds
    w = is_walk_regular(path_graph(3))
    assert not w.holds and w.witness[0] == 2
    # some cubic graphs on 8 vertices are regular without being walk-regular
    from coedge.generate import enumerate_regular

    assert any(not is_walk_regular(g).holds for g in enumerate_regular(8, 3))


def test_strongly_regular():
    assert strongly_regular_params(shrikhande_graph()) == (16, 6, 2, 2)
    assert strongly_regular_params(grid_graph(4, 4)) == (16, 6, 2, 2)
    w = strongly_regular_params(grid_graph(4, 3))
    assert w.kind == "a-nonconstant" and {w.observed, w.expected} == {1, 2}


def test_srg_eigen_data():
    d = srg_eigen_data(10, 3, 0, 1)
    assert (d.theta.value, d.tau.value, d.m_theta, d.m_tau) == (1, -2, 5, 4)
    d = srg_eigen_data(16, 6, 2, 2)
    assert (d.theta.value, d.tau.value, d.m_theta, d.m_tau) == (2, -2, 6, 9)
    d = srg_eigen_data(5, 2, 0, 1)
    assert d.conference and d.theta.poly == X ** 2 + X - 1
    assert alg_cmp_rational(d.theta, Fraction(1, 2)) > 0 and alg_cmp_rational(d.tau, -2) > 0
    with pytest.raises(InfeasibleParameters):
        srg_eigen_data(10, 3, 1, 1)
    with pytest.raises(InfeasibleParameters):
        srg_eigen_data(10, 1, 0, 2)
    d = srg_eigen_data(6, 4, 2, 4)  # cocktail party, k = c
    assert (d.theta.value, d.tau.value, d.m_theta, d.m_tau) == (0, -2, 3, 2)


def test_srg_data_matches_spectra(fixtures):
    for g in fixtures.values():
        params = strongly_regular_params(g)
        if isinstance(params, Witness):
            continue
        d = srg_eigen_data(*params)
        assert d.trace_ok and d.m_theta + d.m_tau == g.n - 1
        spec = spectrum(g)
        if d.theta.exact and d.tau.exact:
            assert spec.multiplicity(d.theta.value) == d.m_theta
            assert spec.multiplicity(d.tau.value) == d.m_tau


def test_srg_trace_identity_on_feasible_tuples():
    checked = 0
    for n in range(5, 40):
        for k in range(1, n - 1):
            for a in range(0, k):
                for c in range(1, k):
                    if k * (k - a - 1) != (n - k - 1) * c:
                        continue
                    try:
                        d = srg_eigen_data(n, k, a, c)
                    except InfeasibleParameters:
                        continue
                    assert d.trace_ok
                    checked += 1
    assert checked > 30


def test_spectral_ell():
    assert ell_from_spectrum(grid_graph(4, 3), 2) == 3
    assert ell_from_spectrum(EXT_C5, 2) == 4
    assert ell_from_spectrum(EXT_PET, 2) == 4
    for g in (grid_graph(4, 3), EXT_C5, EXT_PET):
        assert theorem12_ell(g) == ell_from_spectrum(g, 2)


def test_terwilliger():
    assert is_terwilliger(petersen_graph()) == (True, 1)
    w = is_terwilliger(grid_graph(3, 3))
    assert isinstance(w, Witness)
    assert is_terwilliger(EXT_C5) == (True, 2)
    with pytest.raises(GraphError):
        is_terwilliger(complete_graph(3))


def test_moment_identities():
    rep = moment_identities(grid_graph(4, 3))
    assert rep.holds and set(rep.sum_a) == {8}
    assert moment_identities(EXT_C5).holds
    rep = moment_identities(petersen_graph())
    assert rep.holds and set(rep.sum_a) == {0}
    assert isinstance(moment_identities(path_graph(4)), Witness)


def test_report_flags_carry_witnesses(fixtures):
    for g in list(fixtures.values()) + [path_graph(5), disjoint_union(cycle_graph(5), cycle_graph(4))]:
        rep = regularity_report(g)
        false_flags = [k for k, v in rep.flags.items() if not v and k not in ("complete", "empty")]
        if false_flags:
            assert rep.witnesses
        assert (rep.k is not None) == rep.flags["regular"]
        assert (rep.c is not None) == rep.flags["co_edge_regular"]
        assert (rep.ell is not None) == rep.flags["strongly_co_edge_regular"]


@given(graphs(max_n=9))
def test_ell_matches_brute_force(g):
    ell = strongly_co_edge_regular_ell(g)
    if isinstance(ell, Witness):
        if ell.kind == "ell-nonconstant":
            assert len(_brute_ell(g)) > 1
    else:
        assert _brute_ell(g) == {ell}
