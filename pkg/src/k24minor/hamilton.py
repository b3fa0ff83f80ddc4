"""Hamilton cycles, paths and bases for K_{2,4}-minor-free graphs.

A hamilton base is a trail x_0 x_1 .. x_n x_{n+1} whose interior x_1 .. x_n is
a hamilton path; either end edge is optional.  Subdividing base edges any
number of times keeps a hamilton path, which is how strips are threaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .catalog import CatalogEntry, catalog_entry, match_catalog
from .core_graph import Edge, Graph, GraphError, bits, is_k_connected, norm_edge
from .outerplanar import OuterWitness


@dataclass(frozen=True)
class HamiltonCertificate:
    kind: str  # "cycle", "path" or "base"
    sequence: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "sequence": list(self.sequence)}


def _walk_ok(g: Graph, seq: Sequence[int]) -> bool:
    return all(0 <= v < g.n for v in seq) and all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def base_window(g: Graph, seq: Sequence[int]) -> tuple[int, int] | None:
    """(lo, hi) with seq[lo:hi] the hamilton path of a valid base, or None."""
    n, k = g.n, len(seq)
    if not _walk_ok(g, seq):
        return None
    edges = [norm_edge(seq[i], seq[i + 1]) for i in range(k - 1)]
    if len(set(edges)) != len(edges):
        return None
    windows = {0: [(0, n)], 1: [(0, n), (1, n + 1)], 2: [(1, n + 1)]}.get(k - n, [])
    for lo, hi in windows:
        if sorted(seq[lo:hi]) == list(range(n)):
            return lo, hi
    return None


def verify_hamilton(g: Graph, c: HamiltonCertificate) -> bool:
    seq = list(c.sequence)
    if c.kind == "base":
        return base_window(g, seq) is not None
    if sorted(seq) != list(range(g.n)) or not _walk_ok(g, seq):
        return False
    if c.kind == "path":
        return True
    if c.kind == "cycle":
        return g.n >= 3 and g.has_edge(seq[-1], seq[0])
    return False


# -- exhaustive search ----------------------------------------------------------------


def hamilton_paths(g: Graph, prefer: frozenset[Edge] = frozenset(), start: int | None = None) -> Iterator[list[int]]:
    """Every hamilton path (as a vertex list, each direction separately).

    Neighbours joined by a ``prefer`` edge are tried first and, without a
    fixed start, the ends of ``prefer`` paths are tried as starts first.
    """
    if g.n == 0:
        return
    pdeg = [0] * g.n
    for a, b in prefer:
        pdeg[a] += 1
        pdeg[b] += 1
    starts = [start] if start is not None else sorted(range(g.n), key=lambda v: (pdeg[v] != 1, pdeg[v] == 0, v))
    full = g.full
    for s in starts:
        path = [s]
        stack = [_ordered(g, s, 1 << s, prefer)]
        used = 1 << s
        while stack:
            if used == full:
                yield list(path)
            nxt = None
            while stack[-1]:
                w = stack[-1].pop()
                if not used >> w & 1:
                    nxt = w
                    break
            if nxt is None or used == full:
                stack.pop()
                used &= ~(1 << path.pop())
                continue
            path.append(nxt)
            used |= 1 << nxt
            stack.append(_ordered(g, nxt, used, prefer))


def _ordered(g: Graph, v: int, used: int, prefer: frozenset[Edge]) -> list[int]:
    cands = list(bits(g.adj[v] & ~used))
    # popped from the end: preferred neighbours last in the list
    return sorted(cands, key=lambda w: (norm_edge(v, w) in prefer, -w))


def find_hamilton_cycle(g: Graph) -> list[int] | None:
    if g.n < 3:
        return None
    for p in hamilton_paths(g, start=0):
        if g.has_edge(p[-1], p[0]):
            return p
    return None


def find_hamilton_base(g: Graph, need: frozenset[Edge]) -> list[int] | None:
    """A base whose edge set contains ``need``, by exhaustive search."""
    for p in hamilton_paths(g, prefer=need):
        on_path = {norm_edge(p[i], p[i + 1]) for i in range(len(p) - 1)}
        rest = set(need) - on_path
        if len(rest) > 2:
            continue
        head, tail = p[0], p[-1]
        front = [e for e in rest if head in e]
        back = [e for e in rest if tail in e]
        for f in ([None] + front) if len(rest) < 2 or front else [None]:
            for b in ([None] + back):
                if f is not None and f == b:
                    continue
                covered = {e for e in (f, b) if e is not None}
                if covered != rest:
                    continue
                seq = list(p)
                if f is not None:
                    seq.insert(0, f[0] if f[1] == head else f[1])
                if b is not None:
                    seq.append(b[0] if b[1] == tail else b[1])
                if base_window(g, seq) is not None:
                    return seq
    return None


def base_edges(seq: Sequence[int]) -> frozenset[Edge]:
    return frozenset(norm_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def derive_hamilton_bases(entry: CatalogEntry) -> list[HamiltonCertificate]:
    out = []
    for f in entry.maximal_subdividable_sets:
        seq = find_hamilton_base(entry.graph, f)
        if seq is None:
            raise GraphError(f"no hamilton base contains {sorted(f)} in {entry.id}")
        out.append(HamiltonCertificate("base", tuple(seq)))
    return out


# -- constructive results ---------------------------------------------------------------


def hamilton_cycle_3conn(g: Graph) -> HamiltonCertificate:
    """Hamilton cycle of a 3-connected K_{2,4}-minor-free graph via its catalog entry."""
    if not is_k_connected(g, 3):
        raise GraphError("expected a 3-connected graph")
    hit = match_catalog(g)
    if hit is None:
        raise GraphError("3-connected graph outside the catalog: it has a K_{2,4} minor")
    cid, perm = hit
    cyc = catalog_entry(cid).hamilton_cycle
    return HamiltonCertificate("cycle", tuple(perm[v] for v in cyc))


def _interior(w: OuterWitness, a: int, b: int) -> list[int]:
    """Strip interior in order from a towards b."""
    order = list(w.ordering)
    if order[0] != a:
        order.reverse()
    return order[1:-1]


def _base_for(entry: CatalogEntry, need: frozenset[Edge]) -> list[int]:
    for b in entry.hamilton_bases:
        if need <= base_edges(b):
            return list(b)
    raise GraphError(f"no stored base of {entry.id} contains {sorted(need)}")


def hamilton_path_2conn(g: Graph) -> HamiltonCertificate:
    """Hamilton path of a 2-connected K_{2,4}-minor-free graph, built from its certificate."""
    from .recognizer import CoreExpansion, HasK24Minor, HasMinor, Outerplanar, ThreeSheets, recognize_block

    if g.n <= 2:
        return HamiltonCertificate("path", tuple(range(g.n)))
    if not is_k_connected(g, 2):
        raise GraphError("expected a 2-connected graph")
    cert = recognize_block(g)
    if isinstance(cert, HasMinor):
        raise HasK24Minor(cert.model)
    if isinstance(cert, Outerplanar):
        return HamiltonCertificate("path", cert.witnesses[0].ordering)
    if isinstance(cert, ThreeSheets):
        i1, i2, i3 = (list(w.ordering[1:-1]) for w in cert.sheets)
        seq = i1[::-1] + [cert.x] + i2 + [cert.y] + i3[::-1]
        return HamiltonCertificate("path", tuple(seq))
    assert isinstance(cert, CoreExpansion)
    entry = catalog_entry(cert.core)
    strips = {norm_edge(*e): w for e, w in cert.replaced if len(w.ordering) >= 3}
    base = _base_for(entry, frozenset(strips))
    seq = thread_base(entry.graph, base, cert.phi, strips)
    return HamiltonCertificate("path", tuple(seq))


def thread_base(core: Graph, base: Sequence[int], phi: Sequence[int], strips: dict[Edge, OuterWitness]) -> list[int]:
    """Hamilton path of a strip expansion of ``core`` from a base containing every strip edge."""
    win = base_window(core, base)
    if win is None:
        raise GraphError("invalid hamilton base")
    lo, hi = win
    path: list[int] = []
    if lo == 1:
        e = norm_edge(base[0], base[1])
        if e in strips:
            path.extend(_interior(strips[e], phi[base[0]], phi[base[1]]))
    for i in range(lo, hi):
        path.append(phi[base[i]])
        if i + 1 < hi:
            e = norm_edge(base[i], base[i + 1])
            if e in strips:
                path.extend(_interior(strips[e], phi[base[i]], phi[base[i + 1]]))
    if hi < len(base):
        e = norm_edge(base[hi - 1], base[hi])
        if e in strips:
            path.extend(_interior(strips[e], phi[base[hi - 1]], phi[base[hi]]))
    return path
