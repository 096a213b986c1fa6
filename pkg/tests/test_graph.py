import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from coedge.graph import (
    Graph,
    GraphError,
    a_xy,
    cartesian_product,
    common_neighbors,
    complement,
    complete_bipartite,
    complete_graph,
    cone,
    cycle_graph,
    disjoint_union,
    empty_graph,
    girth,
    grid_graph,
    induced_subgraph,
    is_connected,
    line_graph,
    local_graph,
    named_family,
    petersen_graph,
    s_clique_extension,
    shrikhande_graph,
    triangular_graph,
)
from coedge.recognize import is_isomorphic

from .strategies import graphs


def _to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _check_simple(g):
    a = g.adjacency_matrix()
    assert (a == a.T).all()
    assert not a.diagonal().any()


def test_complete_graph():
    assert complete_graph(1).num_edges == 0
    k4 = complete_graph(4)
    assert k4.num_edges == 6 and set(k4.degrees()) == {3}
    assert complement(complete_graph(5)) == empty_graph(5)
    with pytest.raises(GraphError):
        complete_graph(0)


def test_named_families():
    t5 = named_family("triangular", 5)
    assert (t5.n, set(t5.degrees())) == (10, {6})
    sh = named_family("shrikhande")
    assert (sh.n, set(sh.degrees())) == (16, {6})
    pet = named_family("petersen")
    assert (pet.n, set(pet.degrees()), girth(pet)) == (10, {3}, 5)
    assert nx.girth(_to_nx(pet)) == 5
    with pytest.raises(GraphError):
        named_family("nope")
    with pytest.raises(GraphError):
        named_family("grid", 3)
    with pytest.raises(GraphError):
        triangular_graph(3)


def test_grid_graph():
    assert grid_graph(2, 2) == cycle_graph(4).relabel([0, 1, 3, 2])
    g = grid_graph(4, 3)
    assert (g.n, set(g.degrees()), g.num_edges) == (12, {5}, 30)
    assert is_isomorphic(grid_graph(5, 3), line_graph(complete_bipartite(5, 3)))
    # row-major: (a, b) ~ (a', b') iff exactly one coordinate agrees
    for u in range(12):
        for v in range(12):
            if u != v:
                same = (u // 3 == v // 3) + (u % 3 == v % 3)
                assert g.has_edge(u, v) == (same == 1)
    with pytest.raises(GraphError):
        grid_graph(1, 3)


def test_clique_extension_layout():
    c5 = cycle_graph(5)
    assert s_clique_extension(c5, 1) == c5
    e = s_clique_extension(c5, 2)
    assert (e.n, set(e.degrees())) == (10, {5})
    e = s_clique_extension(petersen_graph(), 2)
    assert (e.n, set(e.degrees())) == (20, {7})
    for s in (2, 3):
        a = c5.adjacency_matrix()
        expected = np.kron(a + np.eye(5, dtype=int), np.ones((s, s), dtype=int)) - np.eye(5 * s, dtype=int)
        assert (s_clique_extension(c5, s).adjacency_matrix() == expected).all()


def test_clique_extension_degree_law(fixtures):
    for g in fixtures.values():
        if not g.is_regular() or g.n > 30:
            continue
        k = g.degree(0)
        for s in (1, 2, 3):
            ext = s_clique_extension(g, s)
            _check_simple(ext)
            assert set(ext.degrees()) == {s * (k + 1) - 1}


def test_cone():
    star = cone(empty_graph(6))
    assert sorted(star.degrees()) == [1] * 6 + [6]
    wheel = cone(cycle_graph(4))
    assert sorted(wheel.degrees(), reverse=True) == [4, 3, 3, 3, 3]
    assert wheel.degree(4) == 4
    c = cone(disjoint_union(complete_graph(2), complete_graph(2), empty_graph(7)))
    assert c.n == 12 and c.degree(11) == 11


def test_combinators():
    assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))
    assert is_isomorphic(line_graph(complete_bipartite(4, 3)), grid_graph(4, 3))
    g = grid_graph(4, 3)
    for v in range(g.n):
        loc = local_graph(g, v)
        assert is_isomorphic(loc, disjoint_union(complete_graph(3), complete_graph(2)))
    assert disjoint_union(cycle_graph(5), complete_graph(3)).n == 8
    for p in range(2, 7):
        for q in range(2, p + 1):
            assert cartesian_product(complete_graph(p), complete_graph(q)) == grid_graph(p, q)
            assert is_isomorphic(line_graph(complete_bipartite(p, q)), grid_graph(p, q))
    with pytest.raises(GraphError):
        induced_subgraph(g, [0, 0])
    with pytest.raises(GraphError):
        local_graph(g, 99)


def test_common_neighbours():
    assert a_xy(complete_graph(4), 0, 1) == 2
    g = grid_graph(3, 3)
    assert a_xy(g, 0, 1) == 1
    pet = petersen_graph()
    non = next((u, v) for u in range(10) for v in range(u + 1, 10) if not pet.has_edge(u, v))
    assert len(common_neighbors(pet, *non)) == 1
    with pytest.raises(GraphError):
        a_xy(g, 2, 2)


def test_line_graph_matches_networkx():
    g = petersen_graph()
    assert nx.is_isomorphic(_to_nx(line_graph(g)), nx.line_graph(_to_nx(g)))


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (1,))  # loop
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_shrikhande_is_not_grid():
    assert not is_isomorphic(shrikhande_graph(), grid_graph(4, 4))
    assert is_connected(shrikhande_graph())


@given(graphs())
def test_double_complement(g):
    _check_simple(g)
    assert complement(complement(g)) == g


@given(graphs(max_n=7), graphs(max_n=7))
def test_disjoint_union_counts(g, h):
    u = disjoint_union(g, h)
    assert u.n == g.n + h.n and u.num_edges == g.num_edges + h.num_edges
    _check_simple(u)
