"""Reference graphs and the parameter table for strongly regular graphs with
smallest eigenvalue -2 (together with K_n and the pentagon).

Graphs that have no constructor in the library (Clebsch, Schläfli and the
three Chang graphs) are read from graph6 data shipped with the package; see
``scripts/gen_srg_fixtures.py`` for how that file was produced.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graph import (
    Graph,
    cocktail_party,
    complete_graph,
    cycle_graph,
    grid_graph,
    petersen_graph,
    s_clique_extension,
    shrikhande_graph,
    triangular_graph,
)
from .io import parse_graph6


def _kn(n):
    return n, n - 1, n - 2, 0


# name -> (parameter function or fixed tuple, smallest admissible n)
TABLE_1 = {
    "complete": (_kn, 2),
    "pentagon": ((5, 2, 0, 1), None),
    "triangular": (lambda n: (n * (n - 1) // 2, 2 * n - 4, n - 2, 4), 5),
    "square-grid": (lambda n: (n * n, 2 * n - 2, n - 2, 2), 3),
    "cocktail-party": (lambda n: (2 * n, 2 * (n - 1), 2 * (n - 2), 2 * (n - 1)), 2),
    "petersen": ((10, 3, 0, 1), None),
    "clebsch": ((16, 10, 6, 6), None),
    "schlafli": ((27, 16, 10, 8), None),
    "shrikhande": ((16, 6, 2, 2), None),
    "chang": ((28, 12, 6, 4), None),
}


def table1_parameters(name: str, n: int | None = None) -> tuple[int, int, int, int]:
    """``(v, k, a, c)`` for a row of the table; parametrized rows need *n*."""
    try:
        entry, least = TABLE_1[name]
    except KeyError:
        raise KeyError(f"no table row {name!r}; known: {', '.join(TABLE_1)}") from None
    if least is None:
        if n is not None:
            raise ValueError(f"row {name!r} takes no parameter")
        return entry
    if n is None or n < least:
        raise ValueError(f"row {name!r} needs n >= {least}")
    return entry(n)


SRG_FIXTURE_NAMES = ("clebsch", "schlafli", "chang1", "chang2", "chang3")


@lru_cache(maxsize=None)
def _stored() -> dict[str, Graph]:
    text = resources.files("coedge").joinpath("data/srg_fixtures.g6").read_text()
    out = {}
    for line in text.splitlines():
        if line.strip():
            name, code = line.split()
            out[name] = parse_graph6(code).with_label(name)
    return out


def srg_fixture(name: str) -> Graph:
    try:
        return _stored()[name]
    except KeyError:
        raise KeyError(f"no stored fixture {name!r}; known: {', '.join(SRG_FIXTURE_NAMES)}") from None


def table1_graphs() -> list[tuple[str, tuple[int, int, int, int], Graph]]:
    """Concrete members of every table row, with the row's parameters."""
    out = [
        ("complete", table1_parameters("complete", 5), complete_graph(5)),
        ("pentagon", table1_parameters("pentagon"), cycle_graph(5)),
        ("triangular", table1_parameters("triangular", 5), triangular_graph(5)),
        ("triangular", table1_parameters("triangular", 6), triangular_graph(6)),
        ("square-grid", table1_parameters("square-grid", 3), grid_graph(3, 3)),
        ("square-grid", table1_parameters("square-grid", 4), grid_graph(4, 4)),
        ("cocktail-party", table1_parameters("cocktail-party", 3), cocktail_party(3)),
        ("petersen", table1_parameters("petersen"), petersen_graph()),
        ("shrikhande", table1_parameters("shrikhande"), shrikhande_graph()),
    ]
    for name in SRG_FIXTURE_NAMES:
        row = "chang" if name.startswith("chang") else name
        out.append((row, table1_parameters(row), srg_fixture(name)))
    return out


def fixture_graphs(max_grid: int = 6) -> dict[str, Graph]:
    """The reference collection used by the property and acceptance tests."""
    out: dict[str, Graph] = {}
    for p in range(2, max_grid + 1):
        for q in range(2, p + 1):
            out[f"grid({p},{q})"] = grid_graph(p, q)
    out["C5"] = cycle_graph(5)
    out["K5"] = complete_graph(5)
    out["T(5)"] = triangular_graph(5)
    out["T(6)"] = triangular_graph(6)
    out["K3x2"] = cocktail_party(3)
    out["petersen"] = petersen_graph()
    out["shrikhande"] = shrikhande_graph()
    out["ext2(C5)"] = s_clique_extension(cycle_graph(5), 2)
    out["ext2(petersen)"] = s_clique_extension(petersen_graph(), 2)
    for name in SRG_FIXTURE_NAMES:
        out[name] = srg_fixture(name)
    return out
