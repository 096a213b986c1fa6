"""Canonical labelling, isomorphism, and recognizers for grids, clique
extensions and quadrangle-free strongly co-edge-regular structure.

Canonical labelling follows the individualization-refinement scheme: refine
to the coarsest equitable ordered partition, individualize a vertex of the
first non-singleton cell, refine again, and recurse.  Each discrete leaf
gives a relabelling; the canonical form is the least relabelled adjacency
among all leaves.  Automorphisms discovered when two leaves coincide prune
the tree (orbit pruning plus a jump back to the common ancestor).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    _bits,
    components,
    cycle_graph,
    grid_graph,
    is_connected,
    local_graph,
    petersen_graph,
    s_clique_extension,
    shrikhande_graph,
)
from .io import encode_graph6
from .regularity import Witness, co_edge_regular_params, strongly_co_edge_regular_ell
from .search import has_induced_quadrangle
from .spectra import refine_partition


@dataclass(frozen=True)
class CanonicalForm:
    canon: str  # graph6 of the canonically relabelled graph
    relabelling: tuple[int, ...]  # vertex v gets canonical label relabelling[v]
    graph: Graph


def _leaf_key(rows, perm: list[int]) -> tuple[int, ...]:
    new = [0] * len(rows)
    for v, r in enumerate(rows):
        m = 0
        for u in _bits(r):
            m |= 1 << perm[u]
        new[perm[v]] = m
    return tuple(new)


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    rows = g.rows
    if n == 0:
        return CanonicalForm(encode_graph6(g), (), g)
    root = refine_partition(rows, [list(range(n))])
    state = {"first": None, "best": None}  # each: (key, perm, path)
    autos: list[tuple[int, ...]] = []

    def leaf(cells, path):
        perm = [0] * n
        for i, c in enumerate(cells):
            perm[c[0]] = i
        key = _leaf_key(rows, perm)
        if state["first"] is None:
            state["first"] = state["best"] = (key, perm, path)
            return None
        for name in ("first", "best"):
            okey, operm, opath = state[name]
            if key == okey:
                inv = [0] * n
                for v, lab in enumerate(operm):
                    inv[lab] = v
                autos.append(tuple(inv[perm[v]] for v in range(n)))
                common = 0
                while common < len(path) and common < len(opath) and path[common] == opath[common]:
                    common += 1
                return common
        if key < state["best"][0]:
            state["best"] = (key, perm, path)
        return None

    def explore(cells, path):
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            return leaf(cells, path)
        depth = len(path)
        idx = cells.index(target)
        tried: list[int] = []
        for v in list(target):
            gens = [a for a in autos if all(a[w] == w for w in path)]
            if gens:
                roots = _orbit_roots(n, gens)
                if any(roots[u] == roots[v] for u in tried):
                    continue
            tried.append(v)
            child = [list(c) for c in cells]
            child[idx:idx + 1] = [[v], [w for w in target if w != v]]
            child = refine_partition(rows, child, active=[idx])
            jump = explore(child, path + (v,))
            if jump is not None and jump < depth:
                return jump
        return None

    explore(root, ())
    key, perm, _ = state["best"]
    canon_graph = Graph(n, key)
    return CanonicalForm(encode_graph6(canon_graph), tuple(perm), canon_graph)


def _cheap_invariants(g: Graph):
    return g.n, g.num_edges, tuple(sorted(g.degrees()))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if _cheap_invariants(g) != _cheap_invariants(h):
        return False
    return canonical_form(g).canon == canonical_form(h).canon


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A permutation ``phi`` with ``g.relabel(phi) == h``, or None."""
    if _cheap_invariants(g) != _cheap_invariants(h):
        return None
    cg, ch = canonical_form(g), canonical_form(h)
    if cg.canon != ch.canon:
        return None
    inv_h = [0] * h.n
    for v, lab in enumerate(ch.relabelling):
        inv_h[lab] = v
    return tuple(inv_h[cg.relabelling[v]] for v in range(g.n))


# grids ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class GridRecognition:
    p: int
    q: int
    isomorphism: tuple[int, ...]  # g.relabel(isomorphism) == grid_graph(p, q)


def recognize_grid(g: Graph) -> GridRecognition | None:
    """Recognize a p x q grid (p >= q >= 2) from its local structure.

    Every local graph must be two disjoint cliques; the closed cliques
    through each vertex are its row and column lines.  Lines must fall into
    two parallel classes with every row meeting every column exactly once.
    """
    n = g.n
    if n < 4 or not g.is_regular() or not is_connected(g):
        return None
    lines: dict[int, int] = {}  # line mask -> line index
    through: list[list[int]] = [[] for _ in range(n)]
    sizes = None
    for v in range(n):
        delta = local_graph(g, v)
        comps = components(delta)
        if len(comps) != 2:
            return None
        nbrs = g.neighbors(v)
        cur = []
        for comp in comps:
            cmask = sum(1 << i for i in comp)
            if any(delta.rows[i] | (1 << i) != cmask for i in comp):
                return None
            mask = (1 << v) | sum(1 << nbrs[i] for i in comp)
            cur.append(len(comp) + 1)
            if mask not in lines:
                lines[mask] = len(lines)
            through[v].append(lines[mask])
        key = tuple(sorted(cur))
        if sizes is None:
            sizes = key
        elif key != sizes:
            return None
    masks = sorted(lines, key=lambda m: lines[m])
    # 2-colour the lines: two lines through a common vertex are in different classes
    colour = [-1] * len(masks)
    colour[through[0][0]] = 0
    stack = [through[0][0]]
    adj: list[list[int]] = [[] for _ in masks]
    for v in range(n):
        a, b = through[v]
        adj[a].append(b)
        adj[b].append(a)
    while stack:
        li = stack.pop()
        for lj in adj[li]:
            if colour[lj] < 0:
                colour[lj] = 1 - colour[li]
                stack.append(lj)
            elif colour[lj] == colour[li]:
                return None
    if min(colour) < 0:
        return None
    cls = [[m for i, m in enumerate(masks) if colour[i] == c] for c in (0, 1)]
    # rows: the class whose lines have size q (the smaller), p rows in total
    size0 = cls[0][0].bit_count()
    size1 = cls[1][0].bit_count()
    if any(m.bit_count() != size0 for m in cls[0]) or any(m.bit_count() != size1 for m in cls[1]):
        return None
    if size0 > size1 or (size0 == size1 and min(_bits(cls[0][0])) > min(_bits(cls[1][0]))):
        cls.reverse()
    rows_, cols_ = cls
    q, p = rows_[0].bit_count(), cols_[0].bit_count()
    if p < 2 or q < 2 or len(rows_) != p or len(cols_) != q or n != p * q:
        return None
    rows_.sort(key=lambda m: (m & -m))
    cols_.sort(key=lambda m: (m & -m))
    row_of, col_of = [0] * n, [0] * n
    for a, m in enumerate(rows_):
        for v in _bits(m):
            row_of[v] = a
    for b, m in enumerate(cols_):
        for v in _bits(m):
            col_of[v] = b
    iso = tuple(row_of[v] * q + col_of[v] for v in range(n))
    if len(set(iso)) != n:
        return None
    if g.relabel(iso) != grid_graph(p, q):
        return None
    return GridRecognition(p, q, iso)


# clique extensions -----------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueExtension:
    s: int
    quotient: Graph
    isomorphism: tuple[int, ...]  # g.relabel(isomorphism) == s_clique_extension(quotient, s)
    note: str = ""


def recognize_clique_extension(g: Graph) -> CliqueExtension:
    """Group vertices with equal closed neighbourhoods; a uniform class size
    s >= 2 exhibits *g* as the s-clique extension of the quotient."""
    if g.n == 0:
        raise GraphError("empty vertex set")
    if g.is_complete():
        raise GraphError("clique-extension recognition needs a non-complete graph")
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.rows[v] | (1 << v), []).append(v)
    groups = sorted(classes.values(), key=lambda c: c[0])
    sizes = {len(c) for c in groups}
    identity = tuple(range(g.n))
    if len(sizes) != 1:
        return CliqueExtension(1, g, identity, "closed-neighbourhood classes have mixed sizes")
    s = sizes.pop()
    if s == 1:
        return CliqueExtension(1, g, identity, "all closed neighbourhoods are distinct")
    index = {}
    for i, c in enumerate(groups):
        for v in c:
            index[v] = i
    edges = set()
    for i, c in enumerate(groups):
        for u in _bits(g.rows[c[0]]):
            j = index[u]
            if j != i:
                edges.add((min(i, j), max(i, j)))
    quotient = Graph.from_edges(len(groups), sorted(edges))
    iso = [0] * g.n
    for i, c in enumerate(groups):
        for j, v in enumerate(c):
            iso[v] = i * s + j
    iso = tuple(iso)
    if g.relabel(iso) != s_clique_extension(quotient, s):  # pragma: no cover
        raise AssertionError("clique extension certificate failed")
    return CliqueExtension(s, quotient, iso)


# quadrangle-free structure with c = 2 --------------------------------------------------


class TerwilligerVerdict(str, enum.Enum):
    HAS_QUADRANGLE = "has quadrangle"
    EXT_PENTAGON = "2-clique extension of pentagon"
    EXT_PETERSEN = "2-clique extension of Petersen"
    OTHER = "quadrangle-free, not a named extension"


class PreconditionError(ValueError):
    pass


def terwilliger_structure(g: Graph) -> tuple[TerwilligerVerdict, object]:
    """Classify a strongly co-edge-regular graph with c = 2: it either has an
    induced quadrangle (returned as witness) or should be the 2-clique
    extension of the pentagon or of the Petersen graph."""
    params = co_edge_regular_params(g)
    if isinstance(params, Witness) or params[2] != 2:
        raise PreconditionError(f"needs co-edge-regular with c = 2, got {params}")
    ell = strongly_co_edge_regular_ell(g)
    if isinstance(ell, Witness):
        raise PreconditionError(f"not strongly co-edge-regular: {ell}")
    quad = has_induced_quadrangle(g)
    if quad is not None:
        return TerwilligerVerdict.HAS_QUADRANGLE, quad
    ext = recognize_clique_extension(g)
    if ext.s == 2:
        if is_isomorphic(ext.quotient, cycle_graph(5)):
            return TerwilligerVerdict.EXT_PENTAGON, ext
        if is_isomorphic(ext.quotient, petersen_graph()):
            return TerwilligerVerdict.EXT_PETERSEN, ext
    return TerwilligerVerdict.OTHER, ext


def is_shrikhande(g: Graph) -> bool:
    return is_isomorphic(g, shrikhande_graph())
