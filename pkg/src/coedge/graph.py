"""Immutable simple graphs on vertices ``0..n-1`` and the constructions used
throughout the package.

Adjacency is stored as one Python ``int`` bitmask per vertex (bit ``j`` of
``rows[i]`` is set iff ``i ~ j``).  Every constructor fixes its vertex order
so that codecs and tests are bit-reproducible:

* grids and Cartesian products are row-major, ``(a, b) -> a * q + b``;
* the s-clique extension puts copy ``j`` of vertex ``i`` at ``i * s + j``;
* line graphs index edges ``(u, v), u < v`` in lexicographic order;
* cones append the apex as the last vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Invalid graph data or invalid vertex references."""


def as_vertex_set(members: Iterable[int], n: int) -> VertexSet:
    """Validate *members* as distinct vertices of an ``n``-vertex graph and
    return them sorted."""
    out = tuple(sorted(members))
    for i, v in enumerate(out):
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
        if i and out[i - 1] == v:
            raise GraphError(f"duplicate vertex {v}")
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    rows: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full or (r >> i) & 1:
                raise GraphError(f"row {i} has a loop or out-of-range bit")
            for j in _bits(r):
                if not (self.rows[j] >> i) & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    # construction helpers -------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str = "") -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), label)

    @classmethod
    def from_matrix(cls, matrix, label: str = "") -> "Graph":
        a = np.asarray(matrix)
        n = a.shape[0]
        if a.shape != (n, n):
            raise GraphError("adjacency matrix must be square")
        rows = tuple(_mask(np.flatnonzero(a[i]).tolist()) for i in range(n))
        return cls(n, rows, label)

    def relabel(self, perm: Sequence[int], label: str | None = None) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling is not a permutation")
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = _mask(perm[u] for u in _bits(self.rows[v]))
        return Graph(self.n, tuple(rows), self.label if label is None else label)

    def with_label(self, label: str) -> "Graph":
        return Graph(self.n, self.rows, label)

    # queries ---------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.num_edges}>"

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> VertexSet:
        return tuple(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def is_empty(self) -> bool:
        return self.num_edges == 0


# named families ------------------------------------------------------------


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise GraphError("K_m needs m >= 1")
    full = (1 << m) - 1
    return Graph(m, tuple(full ^ (1 << i) for i in range(m)), f"K{m}")


def empty_graph(m: int) -> Graph:
    if m < 0:
        raise GraphError("empty graph needs m >= 0")
    return Graph(m, (0,) * m, f"{m}K1")


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise GraphError("C_m needs m >= 3")
    return Graph.from_edges(m, ((i, (i + 1) % m) for i in range(m)), f"C{m}")


def path_graph(m: int) -> Graph:
    if m < 1:
        raise GraphError("P_m needs m >= 1")
    return Graph.from_edges(m, ((i, i + 1) for i in range(m - 1)), f"P{m}")


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("K_{p,q} needs p, q >= 1")
    return Graph.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)), f"K{p},{q}")


def cocktail_party(m: int) -> Graph:
    """K_{m x 2}; vertex ``2i + 1`` is the antipode of ``2i``."""
    if m < 1:
        raise GraphError("K_{m x 2} needs m >= 1")
    g = complement(Graph.from_edges(2 * m, ((2 * i, 2 * i + 1) for i in range(m))))
    return g.with_label(f"K{m}x2")


def triangular_graph(m: int) -> Graph:
    if m < 4:
        raise GraphError("T(m) needs m >= 4")
    return line_graph(complete_graph(m)).with_label(f"T({m})")


def petersen_graph() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges, "Petersen")


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)};
    vertex ``(a, b)`` is ``4a + b``."""
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for a in range(4):
        for b in range(4):
            for da, db in conn:
                u, v = 4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(16, sorted(edges), "Shrikhande")


def grid_graph(p: int, q: int) -> Graph:
    if p < 2 or q < 2:
        raise GraphError("grid needs p, q >= 2")
    g = cartesian_product(complete_graph(p), complete_graph(q))
    return g.with_label(f"grid({p},{q})")


_FAMILIES = {
    "complete": (complete_graph, 1),
    "empty": (empty_graph, 1),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cocktail_party": (cocktail_party, 1),
    "triangular": (triangular_graph, 1),
    "petersen": (petersen_graph, 0),
    "shrikhande": (shrikhande_graph, 0),
    "grid": (grid_graph, 2),
}

FAMILY_NAMES = tuple(sorted(_FAMILIES))


def named_family(name: str, *params: int) -> Graph:
    """Construct a named family member, e.g. ``named_family("grid", 4, 3)``."""
    try:
        ctor, arity = _FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}") from None
    if len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


# combinators ---------------------------------------------------------------


def s_clique_extension(g: Graph, s: int) -> Graph:
    """Replace each vertex by an s-clique; copies of adjacent vertices are
    fully joined.  Adjacency is ``(A + I) kron J_s - I``."""
    if s < 1:
        raise GraphError("s must be positive")
    block = (1 << s) - 1
    rows = []
    for i in range(g.n):
        closed = g.rows[i] | (1 << i)
        big = 0
        for j in _bits(closed):
            big |= block << (j * s)
        for c in range(s):
            rows.append(big ^ (1 << (i * s + c)))
    label = f"{s}-ext({g.label})" if g.label else ""
    return Graph(g.n * s, tuple(rows), label)


def cone(g: Graph) -> Graph:
    apex = g.n
    rows = tuple(r | (1 << apex) for r in g.rows) + ((1 << apex) - 1,)
    return Graph(g.n + 1, rows, f"C({g.label})" if g.label else "")


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(r << offset for r in h.rows)
        offset += h.n
    label = " + ".join(h.label for h in graphs) if all(h.label for h in graphs) else ""
    return Graph(offset, tuple(rows), label)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ r ^ (1 << i) for i, r in enumerate(g.rows)),
                 f"co-{g.label}" if g.label else "")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(u, v)`` is ``u * h.n + v``."""
    m = h.n
    rows = []
    for u in range(g.n):
        for v in range(h.n):
            r = h.rows[v] << (u * m)
            for w in _bits(g.rows[u]):
                r |= 1 << (w * m + v)
            rows.append(r)
    return Graph(g.n * m, tuple(rows))


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    at: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for idx, (u, v) in enumerate(edges):
        at[u].append(idx)
        at[v].append(idx)
    rows = []
    for idx, (u, v) in enumerate(edges):
        rows.append(_mask(at[u] + at[v]) ^ (1 << idx))
    return Graph(len(edges), tuple(rows), f"L({g.label})" if g.label else "")


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on *vertices*, relabelled in ascending order."""
    s = as_vertex_set(vertices, g.n)
    pos = {v: i for i, v in enumerate(s)}
    rows = tuple(_mask(pos[u] for u in _bits(g.rows[v]) if u in pos) for v in s)
    return Graph(len(s), rows)


def local_graph(g: Graph, x: int) -> Graph:
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    return induced_subgraph(g, g.neighbors(x))


def common_neighbors(g: Graph, x: int, y: int) -> VertexSet:
    if x == y:
        raise GraphError("common neighbours need two distinct vertices")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError("vertex out of range")
    return tuple(_bits(g.rows[x] & g.rows[y]))


def a_xy(g: Graph, x: int, y: int) -> int:
    """|N(x) ∩ N(y)|; the usual a_xy when x ~ y."""
    return len(common_neighbors(g, x, y))


# structure -------------------------------------------------------------------


def components(g: Graph) -> list[VertexSet]:
    seen = 0
    out = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def distances_from(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in _bits(g.rows[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for forests."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in _bits(g.rows[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best
