"""Outerplanarity and xy-outerplanarity with vertex-ordering witnesses.

A 2-connected outerplanar graph has a unique hamilton cycle (its outer face)
and every other edge is a chord; chords never cross.  An xy-outerplanar graph
is the path analogue: a hamilton x..y path with pairwise non-crossing chords.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core_graph import Graph, GraphError, all_blocks, blocks, is_k_connected, norm_edge


@dataclass(frozen=True)
class OuterWitness:
    ordering: tuple[int, ...]
    kind: str  # "cycle" or "path"

    def to_json(self) -> dict:
        return {"kind": self.kind, "ordering": list(self.ordering)}

    @classmethod
    def from_json(cls, d: dict) -> OuterWitness:
        return cls(tuple(d["ordering"]), d["kind"])

    def remap(self, f: Sequence[int]) -> OuterWitness:
        return OuterWitness(tuple(f[v] for v in self.ordering), self.kind)


def _laminar(intervals: list[tuple[int, int]]) -> bool:
    stack: list[tuple[int, int]] = []
    for i, j in sorted(intervals, key=lambda p: (p[0], -p[1])):
        while stack and stack[-1][1] <= i:
            stack.pop()
        if stack and stack[-1][1] < j:
            return False
        stack.append((i, j))
    return True


def verify_witness(g: Graph, w: OuterWitness, roots: tuple[int, int] | None = None) -> bool:
    """True iff ``w`` is a valid (path- or cycle-) outer ordering of all of ``g``."""
    order = list(w.ordering)
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    k = len(order)
    if w.kind == "path":
        outer = {norm_edge(order[i], order[i + 1]) for i in range(k - 1)}
        if roots is not None and (k < 2 or (order[0], order[-1]) != tuple(roots)):
            return False
    elif w.kind == "cycle":
        if roots is not None:
            return False
        if k <= 2:
            outer = {norm_edge(order[0], order[1])} if k == 2 else set()
        else:
            outer = {norm_edge(order[i], order[(i + 1) % k]) for i in range(k)}
    else:
        return False
    if any(not g.has_edge(a, b) for a, b in outer):
        return False
    chords = []
    for a, b in g.edges():
        if (a, b) in outer:
            continue
        i, j = sorted((pos[a], pos[b]))
        chords.append((i, j))
    return _laminar(chords)


def _outer_cycle(h: Graph) -> list[int] | None:
    """Outer hamilton cycle of a 2-connected graph with >= 3 vertices, or None.

    Repeatedly removes a degree-2 vertex v with neighbours a, b and lets the
    edge ab stand for the outer segment a..v..b.  An edge that would have to
    stand for two different segments while other vertices remain certifies
    non-outerplanarity, as does running out of degree-2 vertices.
    """
    nb = [set(h.neighbors(v)) for v in range(h.n)]
    seg: dict[tuple[int, int], list[int]] = {}

    def walk(a: int, b: int) -> list[int]:
        s = seg.get(norm_edge(a, b), [])
        return list(s) if a < b else s[::-1]

    alive = set(range(h.n))
    todo = [v for v in range(h.n) if len(nb[v]) == 2]
    while len(alive) > 3:
        v = None
        while todo:
            c = todo.pop()
            if c in alive and len(nb[c]) == 2:
                v = c
                break
        if v is None:
            return None
        a, b = sorted(nb[v])
        piece = walk(a, v) + [v] + walk(v, b)
        alive.discard(v)
        nb[a].discard(v)
        nb[b].discard(v)
        seg.pop(norm_edge(a, v), None)
        seg.pop(norm_edge(v, b), None)
        if b in nb[a] and seg.get((a, b)):
            return None
        nb[a].add(b)
        nb[b].add(a)
        seg[(a, b)] = piece
        todo.extend(w for w in (a, b) if len(nb[w]) == 2)
    a, b, c = sorted(alive)
    if not (b in nb[a] and c in nb[a] and c in nb[b]):
        return None
    return [a] + walk(a, b) + [b] + walk(b, c) + [c] + walk(c, a)


def _normalise_cycle(cyc: list[int]) -> tuple[int, ...]:
    i = cyc.index(min(cyc))
    rot = cyc[i:] + cyc[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def block_outer_cycle(h: Graph) -> OuterWitness | None:
    """Cycle witness for a block (K1, K2 or 2-connected) on its own indices."""
    if h.n <= 2:
        return OuterWitness(tuple(range(h.n)), "cycle")
    cyc = _outer_cycle(h)
    if cyc is None:
        return None
    w = OuterWitness(_normalise_cycle(cyc), "cycle")
    if not verify_witness(h, w):
        raise AssertionError("outer cycle reduction produced an invalid witness")
    return w


def is_outerplanar(g: Graph) -> list[OuterWitness] | None:
    """One cycle witness per block (global indices), or None if not outerplanar."""
    out = []
    for b in sorted(all_blocks(g), key=min):
        h, back = g.induced(b)
        w = block_outer_cycle(h)
        if w is None:
            return None
        out.append(w.remap(back))
    return out


def verify_outerplanar(g: Graph, witnesses: Sequence[OuterWitness]) -> bool:
    """Check a per-block witness list against the block structure of ``g``."""
    want = sorted(sorted(b) for b in all_blocks(g))
    got = sorted(sorted(w.ordering) for w in witnesses)
    if want != got:
        return False
    for w in witnesses:
        h, back = g.induced(w.ordering)
        pos = {v: i for i, v in enumerate(back)}
        if w.kind != "cycle" or not verify_witness(h, OuterWitness(tuple(pos[v] for v in w.ordering), "cycle")):
            return False
    return True


def _check_rooted_block(g: Graph, x: int, y: int) -> None:
    if x == y:
        raise GraphError("x and y must differ")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError("root out of range")
    if not g.is_connected():
        raise GraphError("xy-outerplanarity needs a connected graph")
    h = g.add_edges([(x, y)])
    if h.n > 2 and not is_k_connected(h, 2):
        raise GraphError("G + xy is not a block")


def _xy_block(h: Graph, x: int, y: int) -> tuple[int, ...] | None:
    # h is K2 or 2-connected after adding xy
    if h.n == 2:
        return (x, y)
    hp = h.add_edges([(x, y)])
    cyc = _outer_cycle(hp)
    if cyc is None:
        return None
    i = cyc.index(x)
    k = len(cyc)
    if cyc[(i + 1) % k] == y:
        cyc = cyc[::-1]
        i = cyc.index(x)
    elif cyc[(i - 1) % k] != y:
        return None
    return tuple(cyc[i:] + cyc[:i])


def is_xy_outerplanar(g: Graph, x: int, y: int) -> OuterWitness | None:
    """Path witness (x first, y last) iff ``g`` is xy-outerplanar.

    Requires ``g`` connected with ``g + xy`` a block.  When ``g`` has
    cutvertices its blocks must form a chain from x to y, each block being
    outerplanar between its two attachment vertices; the witnesses are
    concatenated.
    """
    _check_rooted_block(g, x, y)
    bd = blocks(g)
    chain = []
    prev = x
    current = next(i for i, b in enumerate(bd.blocks) if x in b)
    used = {current}
    while True:
        b = bd.blocks[current]
        if y in b:
            chain.append((b, prev, y))
            break
        nxt = [c for c in bd.cutvertices & b if c != prev]
        if len(nxt) != 1:
            raise GraphError("G + xy is not a block")
        c = nxt[0]
        chain.append((b, prev, c))
        cand = [i for i in bd.blocks_containing(c) if i not in used]
        if len(cand) != 1:
            raise GraphError("G + xy is not a block")
        current = cand[0]
        used.add(current)
        prev = c
    order: list[int] = []
    for b, a, c in chain:
        h, back = g.induced(b)
        pos = {v: i for i, v in enumerate(back)}
        part = _xy_block(h, pos[a], pos[c])
        if part is None:
            return None
        mapped = [back[v] for v in part]
        order.extend(mapped if not order else mapped[1:])
    w = OuterWitness(tuple(order), "path")
    if not verify_witness(g, w, (x, y)):
        raise AssertionError("xy-outerplanar composition produced an invalid witness")
    return w
