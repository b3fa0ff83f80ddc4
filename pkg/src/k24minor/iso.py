"""Exact isomorphism for small graphs by colour refinement plus backtracking.

Colour refinement runs jointly on both graphs so colour names agree; the search
individualises one vertex of the smallest non-trivial class at a time.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from .core_graph import Graph, bits


def _refine(adjs: Sequence[Sequence[int]], colours: list[list[int]]) -> list[list[int]]:
    ncls = len({c for cs in colours for c in cs})
    while True:
        sigs = [
            [(cs[v], tuple(sorted(cs[u] for u in bits(adj[v])))) for v in range(len(adj))]
            for adj, cs in zip(adjs, colours)
        ]
        rank = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colours = [[rank[s] for s in ss] for ss in sigs]
        new = len(rank)
        if new == ncls:
            return colours
        ncls = new


def refined_colours(g: Graph) -> list[int]:
    """Stable colour-refinement colouring of ``g`` started from the uniform colouring."""
    return _refine([g.adj], [[0] * g.n])[0]


def invariant(g: Graph) -> tuple:
    """Isomorphism invariant: order, size and the refined colour histogram."""
    cs = refined_colours(g)
    edge_cls = sorted((min(cs[a], cs[b]), max(cs[a], cs[b])) for a, b in g.edges())
    return (g.n, g.m, tuple(sorted(cs)), tuple(edge_cls))


def _search(g: Graph, h: Graph, cg: list[int], ch: list[int], find_all: bool) -> Iterator[list[int]]:
    if Counter(cg) != Counter(ch):
        return
    size = Counter(cg)
    pending = [c for c, k in size.items() if k > 1]
    if not pending:
        where = {c: w for w, c in enumerate(ch)}
        perm = [where[c] for c in cg]
        if all(h.has_edge(perm[a], perm[b]) for a, b in g.edges()):
            yield perm
        return
    target = min(pending, key=lambda c: (size[c], c))
    v = cg.index(target)
    fresh = max(max(cg), max(ch)) + 1
    for w in (i for i, c in enumerate(ch) if c == target):
        cg2 = list(cg)
        ch2 = list(ch)
        cg2[v] = fresh
        ch2[w] = fresh
        rg, rh = _refine([g.adj, h.adj], [cg2, ch2])
        found = False
        for perm in _search(g, h, rg, rh, find_all):
            found = True
            yield perm
            if not find_all:
                return
        if found and not find_all:
            return


def are_isomorphic(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``perm`` with ``uv in E(g) <=> perm[u]perm[v] in E(h)``, or None."""
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return None
    cg, ch = _refine([g.adj, h.adj], [[0] * g.n, [0] * h.n])
    return next(_search(g, h, cg, ch, False), None)


def automorphisms(g: Graph) -> Iterator[list[int]]:
    """All automorphisms of ``g`` (exhaustive; intended for small graphs)."""
    cg, ch = _refine([g.adj, g.adj], [[0] * g.n, [0] * g.n])
    yield from _search(g, g, cg, ch, True)


def edge_orbits(g: Graph) -> list[list[tuple[int, int]]]:
    auts = list(automorphisms(g))
    seen: set[tuple[int, int]] = set()
    orbits = []
    for e in g.edges():
        if e in seen:
            continue
        orb = sorted({tuple(sorted((p[e[0]], p[e[1]]))) for p in auts})
        seen.update(orb)
        orbits.append(orb)
    return orbits


def set_orbit(g: Graph, edge_set: frozenset, auts: list[list[int]] | None = None) -> set[frozenset]:
    """Images of an edge set under all automorphisms."""
    if auts is None:
        auts = list(automorphisms(g))
    return {frozenset(tuple(sorted((p[a], p[b]))) for a, b in edge_set) for p in auts}


def find_subgraph(h: Graph, g: Graph) -> list[int] | None:
    """Injective map of V(h) into V(g) sending edges to edges, or None."""
    if h.n > g.n or h.m > g.m:
        return None
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    # reorder so each vertex after the first tends to have an earlier neighbour
    placed: list[int] = []
    rest = set(order)
    while rest:
        cand = [v for v in order if v in rest and any(h.has_edge(v, p) for p in placed)]
        v = cand[0] if cand else next(v for v in order if v in rest)
        placed.append(v)
        rest.discard(v)
    gdeg = [g.degree(v) for v in range(g.n)]
    image = [-1] * h.n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == len(placed):
            return True
        v = placed[i]
        need = 0
        for p in placed[:i]:
            if h.has_edge(v, p):
                need |= 1 << image[p]
        cands = g.full & ~used
        for q in bits(need):
            cands &= g.adj[q]
        for w in bits(cands):
            if gdeg[w] < h.degree(v):
                continue
            image[v] = w
            used |= 1 << w
            if rec(i + 1):
                return True
            used &= ~(1 << w)
        image[v] = -1
        return False

    return list(image) if rec(0) else None
