"""Induced-subgraph search, cliques and independent sets, and the scan for
induced subgraphs that force the smallest eigenvalue below -3.

All searches are deterministic: vertices are tried in ascending order, so
the reported witness is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    _bits,
    complete_graph,
    complement,
    cone,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    local_graph,
)


@dataclass(frozen=True)
class Embedding:
    """Injective map ``pattern vertex i -> mapping[i]`` into the host."""

    mapping: tuple[int, ...]

    def is_induced(self, host: Graph, pattern: Graph) -> bool:
        m = self.mapping
        if len(m) != pattern.n or len(set(m)) != len(m):
            return False
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                if pattern.has_edge(u, v) != host.has_edge(m[u], m[v]):
                    return False
        return True


def contains_induced(host: Graph, pattern: Graph, order=None) -> Embedding | None:
    """First induced embedding of *pattern* in *host*, or None.

    Pattern vertices are placed in *order* (default ``0..m-1``) and host
    candidates are tried in ascending order, so the result is the
    lexicographically least embedding for that placement order.  Domains are
    kept as bitsets and filtered forward after every placement.
    """
    m = pattern.n
    if m > host.n:
        return None
    if m == 0:
        return Embedding(())
    order = list(range(m)) if order is None else list(order)
    if sorted(order) != list(range(m)):
        raise ValueError("order must be a permutation of the pattern vertices")
    hdeg = host.degrees()
    full = (1 << host.n) - 1
    domains = [0] * m
    for u in range(m):
        du = pattern.degree(u)
        domains[u] = sum(1 << h for h in range(host.n) if hdeg[h] >= du)
        if not domains[u]:
            return None
    mapping = [-1] * m

    def place(depth: int, doms: list[int]) -> bool:
        if depth == m:
            return True
        u = order[depth]
        cand = doms[u]
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            cand ^= low
            new = doms[:]
            ok = True
            for w in order[depth + 1:]:
                if pattern.has_edge(u, w):
                    d = new[w] & host.rows[h]
                else:
                    d = new[w] & ~host.rows[h] & full & ~low
                if not d:
                    ok = False
                    break
                new[w] = d
            if not ok:
                continue
            mapping[u] = h
            if place(depth + 1, new):
                return True
        return False

    if place(0, domains):
        return Embedding(tuple(mapping))
    return None


def has_induced_quadrangle(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced 4-cycle ``x ~ u ~ y ~ v ~ x`` (returned in that order)."""
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            common = _bits(g.rows[x] & g.rows[y])
            for i, u in enumerate(common):
                for v in common[i + 1:]:
                    if not g.has_edge(u, v):
                        return x, u, y, v
    return None


def max_clique(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact clique number with a witness, by branch and bound where greedy
    colouring classes bound the size of any extension."""
    if g.n == 0:
        raise ValueError("max_clique needs at least one vertex")
    # relabel so that low bits are high-degree vertices
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * g.n
    for v in range(g.n):
        adj[pos[v]] = sum(1 << pos[u] for u in _bits(g.rows[v]))
    best_rel: list[int] = [0]

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best_rel
        verts, bounds = [], []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~adj[v] & ~low
                uncoloured &= ~low
                verts.append(v)
                bounds.append(colour)
        for i in range(len(verts) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best_rel):
                return
            v = verts[i]
            nxt = cand & adj[v]
            clique.append(v)
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best_rel):
                best_rel = clique[:]
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    best = sorted(order[v] for v in best_rel)
    return len(best), tuple(best)


def max_independent_set(g: Graph) -> tuple[int, tuple[int, ...]]:
    return max_clique(complement(g))


def independence_number(g: Graph) -> int:
    return max_independent_set(g)[0] if g.n else 0


# forbidden configurations for theta_min >= -3 --------------------------------------

# Minimal (s, t) with (s + 2)(t - 3) > 12 and s >= 1; every other solution
# contains one of these cones as an induced subgraph.
MINIMAL_CONE_PAIRS = ((1, 8), (2, 7), (3, 6), (5, 5), (11, 4))


def cone_pattern(s: int, t: int) -> Graph:
    """``C(2K_s + tK_1)``: cliques on ``0..s-1`` and ``s..2s-1``, isolated
    vertices after them, apex last."""
    parts = [complete_graph(s), complete_graph(s)] if s else []
    if t:
        parts.append(empty_graph(t))
    base = disjoint_union(*parts) if parts else empty_graph(0)
    return cone(base).with_label(f"C(2K{s}+{t}K1)")


def _cliques(*sizes: int) -> Graph:
    return disjoint_union(*(complete_graph(s) if s > 1 else empty_graph(1) for s in sizes))


def named_cone_patterns() -> list[tuple[str, Graph]]:
    """The four sporadic cones, each with smallest eigenvalue below -3."""
    return [
        ("C(2K15+K3+2K1)", cone(_cliques(15, 15, 3, 1, 1))),
        ("C(2K21+K11+K1)", cone(_cliques(21, 21, 11, 1))),
        ("C(C(2K13)+K13)", cone(disjoint_union(cone(_cliques(13, 13)), complete_graph(13)))),
        ("C(C(3K5))", cone(cone(_cliques(5, 5, 5)))),
    ]


@dataclass(frozen=True)
class ForbiddenHit:
    kind: str  # "i", "ii" or "iii"
    family: str
    params: tuple[int, ...]
    pattern: Graph
    embedding: Embedding


def _lift(local: Embedding, nbrs: tuple[int, ...], apex: int) -> Embedding:
    return Embedding(tuple(nbrs[v] for v in local.mapping) + (apex,))


def _bipartite_hit(g: Graph) -> ForbiddenHit | None:
    """A connected induced bipartite subgraph of order 11 containing an
    induced K_{1,9}.

    Any larger witness contains one of order exactly 11 (add a single
    neighbouring vertex to the star), so it is enough to look for a star
    K_{1,9} at some x plus one vertex v: either v ~ x and v extends the
    independent set of leaves, or v is at distance 2 from x and is adjacent
    to some leaf y.
    """
    for x in range(g.n):
        if g.degree(x) < 9:
            continue
        nbrs = g.neighbors(x)
        delta = local_graph(g, x)
        alpha, ind = max_independent_set(delta)
        chosen = None
        if alpha >= 10:
            chosen = [x] + [nbrs[i] for i in ind[:10]]
        else:
            closed_x = g.rows[x] | (1 << x)
            for yi, y in enumerate(nbrs):
                outside = g.rows[y] & ~closed_x
                if not outside:
                    continue
                rest = [i for i in range(delta.n) if i != yi and not delta.has_edge(i, yi)]
                if len(rest) < 8:
                    continue
                sub = induced_subgraph(delta, rest)
                a2, ind2 = max_independent_set(sub)
                if a2 >= 8:
                    v = _bits(outside)[0]
                    chosen = [x, y] + [nbrs[rest[i]] for i in ind2[:8]] + [v]
                    break
        if chosen is not None:
            verts = tuple(sorted(chosen))
            return ForbiddenHit("i", "connected bipartite, order 11, induced K1,9", (11,),
                                induced_subgraph(g, verts), Embedding(verts))
    return None


def _apex_local_search(g: Graph, base: Graph, alphas: list[int], need_alpha: int):
    """Find ``cone(base)`` in *g* with the apex at some vertex x and the base
    inside the local graph of x.  Returns the lifted embedding or None."""
    for x in range(g.n):
        if g.degree(x) < base.n or alphas[x] < need_alpha:
            continue
        emb = contains_induced(local_graph(g, x), base)
        if emb is not None:
            return _lift(emb, g.neighbors(x), x)
    return None


def forbidden_minus3_scan(g: Graph) -> list[ForbiddenHit]:
    """All forbidden-configuration families found in *g*.

    Each hit is an induced subgraph whose smallest eigenvalue is below -3,
    so by interlacing its presence certifies ``theta_min(g) < -3``.  Type
    (ii) is searched only for the minimal (s, t) pairs; a larger member is
    present exactly when some minimal one is.
    """
    hits: list[ForbiddenHit] = []
    if g.n == 0:
        return hits
    hit = _bipartite_hit(g)
    if hit is not None:
        hits.append(hit)
    alphas = [independence_number(local_graph(g, x)) if g.degree(x) else 0 for x in range(g.n)]
    for s, t in MINIMAL_CONE_PAIRS:
        pattern = cone_pattern(s, t)
        base = induced_subgraph(pattern, range(pattern.n - 1))
        emb = _apex_local_search(g, base, alphas, t + 2)
        if emb is not None:
            hits.append(ForbiddenHit("ii", pattern.label, (s, t), pattern, emb))
    for name, pattern in named_cone_patterns():
        base = induced_subgraph(pattern, range(pattern.n - 1))
        need = independence_number(base)
        emb = _apex_local_search(g, base, alphas, need)
        if emb is not None:
            hits.append(ForbiddenHit("iii", name, (), pattern.with_label(name), emb))
    return hits


def cone_violates(s: int, t: int) -> bool:
    """Whether ``C(2K_s + tK_1)`` is a forbidden cone, ``(s + 2)(t - 3) > 12``."""
    return (s + 2) * (t - 3) > 12
