import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from coedge.graph import (
    GraphError,
    complement,
    complete_graph,
    cycle_graph,
    grid_graph,
    petersen_graph,
    s_clique_extension,
    shrikhande_graph,
    triangular_graph,
)
from coedge.recognize import (
    PreconditionError,
    TerwilligerVerdict,
    canonical_form,
    find_isomorphism,
    is_isomorphic,
    recognize_clique_extension,
    recognize_grid,
    terwilliger_structure,
)

from .conftest import random_graph, random_relabel
from .strategies import graphs


def _brute_iso(g, h):
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return any(g.relabel(p) == h for p in permutations(range(g.n)))


def test_isomorphism_examples():
    assert is_isomorphic(cycle_graph(5), complement(cycle_graph(5)))
    assert not is_isomorphic(shrikhande_graph(), grid_graph(4, 4))
    rng = random.Random(1)
    g = grid_graph(4, 3)
    assert is_isomorphic(g, random_relabel(rng, g))


def test_canonical_form_invariance(fixtures):
    rng = random.Random(2)
    for g in fixtures.values():
        cf = canonical_form(g)
        assert g.relabel(cf.relabelling) == cf.graph
        for _ in range(2):
            assert canonical_form(random_relabel(rng, g)).canon == cf.canon


def test_canonical_form_against_brute_force(fixtures):
    small = [g for g in fixtures.values() if g.n <= 8]
    rng = random.Random(3)
    small += [random_graph(rng, rng.randint(3, 7)) for _ in range(25)]
    for g in small:
        for h in small:
            if g.n == h.n and g.num_edges == h.num_edges:
                assert is_isomorphic(g, h) == _brute_iso(g, h)


@given(graphs(max_n=8), st.integers(0, 10 ** 6))
def test_find_isomorphism_certificate(g, seed):
    h = random_relabel(random.Random(seed), g)
    phi = find_isomorphism(g, h)
    assert phi is not None and g.relabel(phi) == h


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_matches_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(_nx(g), _nx(h))


def test_recognize_grid_examples():
    r = recognize_grid(grid_graph(7, 4))
    assert (r.p, r.q) == (7, 4)
    assert recognize_grid(shrikhande_graph()) is None
    r = recognize_grid(cycle_graph(4))
    assert (r.p, r.q) == (2, 2)
    assert recognize_grid(petersen_graph()) is None
    assert recognize_grid(triangular_graph(5)) is None


def test_recognize_all_grids():
    rng = random.Random(9)
    for p in range(2, 13):
        for q in range(2, p + 1):
            for g in (grid_graph(p, q), grid_graph(q, p), random_relabel(rng, grid_graph(p, q))):
                r = recognize_grid(g)
                assert (r.p, r.q) == (p, q)
                assert g.relabel(r.isomorphism) == grid_graph(p, q)


def test_recognize_clique_extension():
    ext = recognize_clique_extension(s_clique_extension(cycle_graph(5), 2))
    assert ext.s == 2 and is_isomorphic(ext.quotient, cycle_graph(5))
    assert recognize_clique_extension(petersen_graph()).s == 1
    ext = recognize_clique_extension(s_clique_extension(petersen_graph(), 2))
    assert ext.s == 2 and is_isomorphic(ext.quotient, petersen_graph())
    with pytest.raises(GraphError):
        recognize_clique_extension(complete_graph(4))


def test_clique_extension_roundtrip(fixtures):
    rng = random.Random(5)
    for g in fixtures.values():
        closed = {g.rows[v] | (1 << v) for v in range(g.n)}
        if len(closed) != g.n or g.is_complete() or g.n > 28:
            continue
        for s in (2, 3):
            ext = s_clique_extension(g, s)
            rec = recognize_clique_extension(random_relabel(rng, ext))
            assert rec.s == s and is_isomorphic(rec.quotient, g)


def test_terwilliger_structure():
    verdict, quad = terwilliger_structure(grid_graph(4, 3))
    assert verdict == TerwilligerVerdict.HAS_QUADRANGLE and len(quad) == 4
    assert terwilliger_structure(s_clique_extension(cycle_graph(5), 2))[0] == TerwilligerVerdict.EXT_PENTAGON
    assert terwilliger_structure(s_clique_extension(petersen_graph(), 2))[0] == TerwilligerVerdict.EXT_PETERSEN
    with pytest.raises(PreconditionError):
        terwilliger_structure(petersen_graph())
