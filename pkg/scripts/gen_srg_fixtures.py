"""Regenerate src/coedge/data/srg_fixtures.g6.

The Clebsch, Schläfli and Chang graphs are built here once and stored as
graph6 text; the library only reads the stored data.  Every graph is checked
for its strongly regular parameters before it is written.

    python3 scripts/gen_srg_fixtures.py
"""

from itertools import combinations
from pathlib import Path

from coedge.graph import Graph, complement, triangular_graph
from coedge.io import encode_graph6
from coedge.recognize import is_isomorphic
from coedge.regularity import strongly_regular_params

OUT = Path(__file__).resolve().parents[1] / "src" / "coedge" / "data" / "srg_fixtures.g6"


def clebsch() -> Graph:
    # folded 5-cube on F_2^4 (differences of weight 1 or 4), then complement
    edges = [(u, v) for u, v in combinations(range(16), 2) if bin(u ^ v).count("1") in (1, 4)]
    return complement(Graph.from_edges(16, edges))


def schlafli() -> Graph:
    # the 27 lines of a cubic surface: a_i, b_i (i < 6) and c_ij; join skew lines
    lines = [("a", i) for i in range(6)] + [("b", i) for i in range(6)]
    lines += [("c", p) for p in combinations(range(6), 2)]

    def meet(x, y):
        (s, i), (t, j) = x, y
        if {s, t} == {"a", "b"}:
            return i != j
        if s == t and s in "ab":
            return False
        if s == "c" and t == "c":
            return not set(i) & set(j)
        single, pair = (i, j) if t == "c" else (j, i)
        return single in pair

    edges = [(u, v) for u, v in combinations(range(27), 2) if not meet(lines[u], lines[v])]
    return Graph.from_edges(27, edges)


def chang(switch_edges) -> Graph:
    # Seidel switching of T(8) with respect to the edges of a spanning subgraph of K8
    t8 = triangular_graph(8)
    pairs = list(combinations(range(8), 2))
    index = {p: i for i, p in enumerate(pairs)}
    s = {index[tuple(sorted(e))] for e in switch_edges}
    edges = []
    for u, v in combinations(range(28), 2):
        adj = t8.has_edge(u, v)
        if (u in s) != (v in s):
            adj = not adj
        if adj:
            edges.append((u, v))
    return Graph.from_edges(28, edges)


def fixtures() -> list[tuple[str, Graph, tuple[int, int, int, int]]]:
    c8 = [(i, (i + 1) % 8) for i in range(8)]
    c3c5 = [(0, 1), (1, 2), (0, 2)] + [(3 + i, 3 + (i + 1) % 5) for i in range(5)]
    return [
        ("clebsch", clebsch(), (16, 10, 6, 6)),
        ("schlafli", schlafli(), (27, 16, 10, 8)),
        ("chang1", chang([(0, 1), (2, 3), (4, 5), (6, 7)]), (28, 12, 6, 4)),
        ("chang2", chang(c8), (28, 12, 6, 4)),
        ("chang3", chang(c3c5), (28, 12, 6, 4)),
    ]


def main() -> None:
    items = fixtures()
    for name, g, params in items:
        got = strongly_regular_params(g)
        if got != params:
            raise SystemExit(f"{name}: expected {params}, got {got}")
    changs = [g for name, g, _ in items if name.startswith("chang")] + [triangular_graph(8)]
    for a, b in combinations(range(len(changs)), 2):
        if is_isomorphic(changs[a], changs[b]):
            raise SystemExit("Chang graphs are not pairwise non-isomorphic")
    text = "".join(f"{name} {encode_graph6(g)}\n" for name, g, _ in items)
    OUT.write_text(text)
    print(f"wrote {len(items)} graphs to {OUT}")


if __name__ == "__main__":
    main()
