"""Brute-force search for standard K_{2,t} minors, optionally rooted.

A standard model is a triple (R1, R2; S): R1 and R2 disjoint connected vertex
sets and S a set of t further vertices, each adjacent to both R1 and R2.  A
graph has a K_{2,t} minor iff it has such a model.

Search strategy (exact):

* The smaller of the two branch sets can be assumed minimal, so for the
  unrooted search R1 ranges over connected sets of size <= (n - t) // 2.
* Given R1 with neighbourhood N1, R2 may be grown by any vertex outside N1
  without losing a candidate for S.  So R2 is the component containing X of
  (G - R1) - (N1 - X) for some X within N1, and only X needs enumerating.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core_graph import Graph, GraphError, bits, mask_of
from .iso import find_subgraph

DEFAULT_BUDGET = 20_000_000


def default_budget() -> int:
    raw = os.environ.get("K24_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


class OracleBudgetExceeded(RuntimeError):
    """The search hit its node cap before reaching a verdict."""


@dataclass(frozen=True)
class StandardMinorModel:
    r1: frozenset[int]
    r2: frozenset[int]
    s: frozenset[int]
    t: int

    def to_json(self) -> dict:
        return {"R1": sorted(self.r1), "R2": sorted(self.r2), "S": sorted(self.s), "t": self.t}

    @classmethod
    def from_json(cls, d: dict) -> StandardMinorModel:
        return cls(frozenset(d["R1"]), frozenset(d["R2"]), frozenset(d["S"]), int(d["t"]))

    def remap(self, f) -> StandardMinorModel:
        return StandardMinorModel(
            frozenset(f[v] for v in self.r1), frozenset(f[v] for v in self.r2), frozenset(f[v] for v in self.s), self.t
        )


class _Budget:
    __slots__ = ("left",)

    def __init__(self, cap: int | None):
        self.left = default_budget() if cap is None else cap

    def spend(self, k: int = 1) -> None:
        self.left -= k
        if self.left < 0:
            raise OracleBudgetExceeded("oracle node budget exceeded")


def connected_sets(g: Graph, allowed: int, max_size: int, root: int | None = None) -> Iterator[int]:
    """Every connected vertex set within ``allowed`` of size <= ``max_size``, once each.

    With ``root`` given, only the sets containing ``root``.  Sets are grown from
    their minimum vertex by exclusive-neighbourhood extension, which produces
    each set exactly once.
    """
    adj = g.adj
    roots = [root] if root is not None else list(bits(allowed))
    for v in roots:
        if not allowed >> v & 1:
            continue
        cand = allowed if root is not None else allowed & ~((1 << v) - 1)
        vb = 1 << v
        stack = [(vb, adj[v] & cand & ~vb, (adj[v] & cand) | vb, 1)]
        while stack:
            sub, ext, nbh, size = stack.pop()
            yield sub
            if size >= max_size:
                continue
            while ext:
                w = ext & -ext
                ext ^= w
                aw = adj[w.bit_length() - 1] & cand
                stack.append((sub | w, ext | (aw & ~nbh), nbh | aw, size + 1))


def _take(mask: int, k: int) -> int:
    out = 0
    for _ in range(k):
        low = mask & -mask
        out |= low
        mask ^= low
    return out


def _partner(g: Graph, r1: int, n1: int, t: int, budget: _Budget, y: int | None = None) -> tuple[int, int] | None:
    """Find (R2, S) completing R1, with y in R2 when rooted."""
    rest = g.full & ~r1
    for comp in g.components(rest):
        if y is not None and not comp >> y & 1:
            continue
        term = n1 & comp
        nt = term.bit_count()
        if nt < t:
            continue
        tl = list(bits(term))
        y_term = y is not None and term >> y & 1
        for k in range(0, nt - t + 1):
            if k == 0 and y_term:
                continue
            for xs in combinations(tl, k):
                budget.spend()
                xm = mask_of(xs)
                if y_term and not xm >> y & 1:
                    continue
                avail = comp & ~(term & ~xm)
                if k == 0:
                    seeds = [g.component_of(y, avail)] if y is not None else g.components(avail)
                else:
                    c = g.component_of(xs[0], avail)
                    if c & xm != xm or (y is not None and not c >> y & 1):
                        continue
                    seeds = [c]
                for r2 in seeds:
                    s = g.neighborhood(r2) & term & ~xm
                    if s.bit_count() >= t:
                        return r2, _take(s, t)
    return None


def _model(r1: int, r2: int, s: int, t: int) -> StandardMinorModel:
    return StandardMinorModel(frozenset(bits(r1)), frozenset(bits(r2)), frozenset(bits(s)), t)


def find_k2t_minor(g: Graph, t: int, budget: int | None = None) -> StandardMinorModel | None:
    """A standard K_{2,t} model in ``g``, or None when there is no K_{2,t} minor."""
    if t < 1:
        raise ValueError("t must be positive")
    if g.n < t + 2 or g.m < 2 * t:
        return None
    b = _Budget(budget)
    max_r1 = (g.n - t) // 2
    for r1 in connected_sets(g, g.full, max_r1):
        b.spend()
        n1 = g.neighborhood(r1)
        if n1.bit_count() < t:
            continue
        hit = _partner(g, r1, n1, t, b)
        if hit is not None:
            return _model(r1, hit[0], hit[1], t)
    return None


def find_rooted_k2t_minor(g: Graph, x: int, y: int, t: int, budget: int | None = None) -> StandardMinorModel | None:
    """A standard K_{2,t} model with x in R1 and y in R2, or None."""
    if x == y:
        raise GraphError("rooted search needs two distinct roots")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError("root out of range")
    if t < 1:
        raise ValueError("t must be positive")
    if g.n < t + 2:
        return None
    b = _Budget(budget)
    allowed = g.full & ~(1 << y)
    for r1 in connected_sets(g, allowed, g.n - t - 1, root=x):
        b.spend()
        n1 = g.neighborhood(r1)
        if n1.bit_count() < t:
            continue
        hit = _partner(g, r1, n1, t, b, y=y)
        if hit is not None:
            return _model(r1, hit[0], hit[1], t)
    return None


def verify_model(g: Graph, m: StandardMinorModel, roots: tuple[int, int] | None = None) -> bool:
    """Check every invariant of a standard K_{2,t} model inside ``g``."""
    vs = m.r1 | m.r2 | m.s
    if any(not (0 <= v < g.n) for v in vs):
        return False
    if m.r1 & m.r2 or m.r1 & m.s or m.r2 & m.s:
        return False
    if not m.r1 or not m.r2 or len(m.s) != m.t:
        return False
    r1, r2 = mask_of(m.r1), mask_of(m.r2)
    if not g.is_connected_mask(r1) or not g.is_connected_mask(r2):
        return False
    for s in m.s:
        if not (g.adj[s] & r1 and g.adj[s] & r2):
            return False
    if roots is not None:
        x, y = roots
        if x not in m.r1 or y not in m.r2:
            return False
    return True


def has_minor(g: Graph, h: Graph) -> bool:
    """Generic minor test for small graphs by exhaustive deletion/contraction.

    Exponential; meant for fixed small ``h`` (K4, K5, K_{3,3}, ...) and
    graphs of about a dozen vertices.
    """
    k = h.n
    seen: set[Graph] = set()

    def rec(cur: Graph) -> bool:
        if cur.n < k or cur.m < h.m or cur in seen:
            return False
        seen.add(cur)
        if cur.n == k:
            return find_subgraph(h, cur) is not None
        for v in range(cur.n):
            if rec(cur.remove_vertices([v])[0]):
                return True
        for e in cur.edges():
            if rec(cur.contract_edge(e)):
                return True
        return False

    return rec(g)
