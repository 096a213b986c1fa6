from itertools import combinations

import networkx as nx
import pytest

from coedge.generate import (
    MAX_N_ENV,
    SearchLimitError,
    enumerate_regular,
    search_co_edge_regular,
)
from coedge.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    grid_graph,
    s_clique_extension,
)
from coedge.recognize import canonical_form, is_isomorphic


def _brute_regular_classes(n, k):
    """Isomorphism classes of k-regular graphs on n vertices by exhaustive enumeration."""
    pairs = list(combinations(range(n), 2))
    m = n * k // 2
    classes = []
    for edges in combinations(pairs, m):
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if any(d != k for d in deg):
            continue
        g = Graph.from_edges(n, edges)
        canon = canonical_form(g).canon
        if canon not in classes:
            classes.append(canon)
    return sorted(classes)


def test_small_enumerations():
    assert list(enumerate_regular(4, 3)) == [complete_graph(4)]
    cubic6 = list(enumerate_regular(6, 3))
    prism = nx.circular_ladder_graph(3)
    assert len(cubic6) == 2
    assert any(is_isomorphic(g, complete_bipartite(3, 3)) for g in cubic6)
    assert any(nx.is_isomorphic(nx.Graph(g.edges()), prism) for g in cubic6)


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (6, 3), (7, 2), (7, 4), (6, 4), (7, 6), (4, 0)])
def test_enumeration_matches_brute_force(n, k):
    ours = sorted(canonical_form(g).canon for g in enumerate_regular(n, k))
    assert len(set(ours)) == len(ours)  # isomorph-free
    assert ours == _brute_regular_classes(n, k)


@pytest.mark.parametrize("n,k,count", [(8, 3, 6), (9, 4, 16), (10, 3, 21), (8, 4, 6)])
def test_known_counts(n, k, count):
    # all k-regular graphs on n vertices, connected or not
    graphs = list(enumerate_regular(n, k))
    assert len(graphs) == count
    assert len({canonical_form(g).canon for g in graphs}) == count


def test_counts_against_atlas():
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    for k in range(0, 7):
        if (7 * k) % 2:
            continue
        expected = sum(1 for g in atlas if all(d == k for _, d in g.degree()))
        assert len(list(enumerate_regular(7, k))) == expected


def test_search_co_edge_regular():
    found = search_co_edge_regular(10, 5, 2)
    assert any(is_isomorphic(g, s_clique_extension(cycle_graph(5), 2)) for g in found)
    assert any(is_isomorphic(g, grid_graph(5, 2)) for g in found)
    assert len(found) == 2
    (c5,) = search_co_edge_regular(5, 2, 1)
    assert is_isomorphic(c5, cycle_graph(5))


def test_argument_errors(monkeypatch):
    with pytest.raises(ValueError):
        list(enumerate_regular(5, 3))
    with pytest.raises(ValueError):
        list(enumerate_regular(4, 4))
    with pytest.raises(SearchLimitError):
        list(enumerate_regular(14, 3))
    monkeypatch.setenv(MAX_N_ENV, "8")
    with pytest.raises(SearchLimitError):
        list(enumerate_regular(10, 3))
    monkeypatch.setenv(MAX_N_ENV, "junk")
    with pytest.raises(SearchLimitError):
        list(enumerate_regular(6, 3))
