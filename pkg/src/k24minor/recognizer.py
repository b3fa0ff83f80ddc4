"""Decide K_{2,4}-minor-freeness block by block and emit checkable certificates.

A block is free iff it is outerplanar, or the union of three xy-outerplanar
sheets (plus possibly the edge xy), or a 3-connected catalog graph with some
edges of one maximal subdividable set replaced by xy-outerplanar strips.  The
strip reduction below peels strips off 2-cuts until a 3-connected core remains.
When a block is not free, a standard K_{2,4} model is found by shrinking the
block while it stays non-free and running the brute-force oracle on the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .catalog import EXCEPTION_NAMES, NONPLANAR_EXCEPTIONS, in_class_G, match_catalog, maximal_subdividable_sets, named_graph, parse_family_id
from .core_graph import Edge, Graph, GraphError, all_blocks, bits, is_k_connected, mask_of, norm_edge, two_cuts
from .minor_oracle import StandardMinorModel, find_k2t_minor, verify_model
from .outerplanar import OuterWitness, block_outer_cycle, is_outerplanar, is_xy_outerplanar, verify_outerplanar, verify_witness

SCHEMA = "k24cert/1"
ORACLE_DIRECT_MAX = 11


class RecognizerError(RuntimeError):
    """Internal inconsistency between the structural test and the oracle."""


class HasK24Minor(GraphError):
    """Raised by operations whose precondition is K_{2,4}-minor-freeness."""

    def __init__(self, model: StandardMinorModel):
        super().__init__(f"graph has a K_{{2,4}} minor: {model.to_json()}")
        self.model = model


# -- certificate variants ---------------------------------------------------------


@dataclass(frozen=True)
class HasMinor:
    model: StandardMinorModel
    kind = "minor"

    def remap(self, f: Sequence[int]) -> HasMinor:
        return HasMinor(self.model.remap(f))

    def vertices(self) -> frozenset[int]:
        return self.model.r1 | self.model.r2 | self.model.s

    def to_json(self) -> dict:
        return {"type": self.kind, **self.model.to_json()}


@dataclass(frozen=True)
class Outerplanar:
    witnesses: tuple[OuterWitness, ...]
    kind = "outerplanar"

    def remap(self, f: Sequence[int]) -> Outerplanar:
        return Outerplanar(tuple(w.remap(f) for w in self.witnesses))

    def vertices(self) -> frozenset[int]:
        return frozenset(v for w in self.witnesses for v in w.ordering)

    def to_json(self) -> dict:
        return {"type": self.kind, "witnesses": [list(w.ordering) for w in self.witnesses]}


@dataclass(frozen=True)
class ThreeSheets:
    x: int
    y: int
    xy_present: bool
    sheets: tuple[OuterWitness, ...]
    kind = "three-sheets"

    def remap(self, f: Sequence[int]) -> ThreeSheets:
        return ThreeSheets(f[self.x], f[self.y], self.xy_present, tuple(w.remap(f) for w in self.sheets))

    def vertices(self) -> frozenset[int]:
        return frozenset(v for w in self.sheets for v in w.ordering)

    def to_json(self) -> dict:
        return {
            "type": self.kind,
            "x": self.x,
            "y": self.y,
            "xy_present": self.xy_present,
            "sheets": [list(w.ordering) for w in self.sheets],
        }


@dataclass(frozen=True)
class CoreExpansion:
    """``phi[i]`` is the vertex standing for core vertex i; ``replaced`` pairs a
    core edge with the outer path of its strip, oriented phi[a] .. phi[b]."""

    core: str
    phi: tuple[int, ...]
    replaced: tuple[tuple[Edge, OuterWitness], ...]
    kind = "core-expansion"

    def remap(self, f: Sequence[int]) -> CoreExpansion:
        return CoreExpansion(self.core, tuple(f[v] for v in self.phi), tuple((e, w.remap(f)) for e, w in self.replaced))

    def vertices(self) -> frozenset[int]:
        return frozenset(self.phi) | frozenset(v for _, w in self.replaced for v in w.ordering)

    def to_json(self) -> dict:
        return {
            "type": self.kind,
            "core": self.core,
            "map": list(self.phi),
            "replaced": [{"edge": list(e), "path": list(w.ordering)} for e, w in self.replaced],
        }


K24Certificate = Union[HasMinor, Outerplanar, ThreeSheets, CoreExpansion]


@dataclass(frozen=True)
class Certificate:
    """Whole-graph certificate: one entry per block when free, the offending block otherwise."""

    verdict: str  # "free" or "minor"
    blocks: tuple[K24Certificate, ...]

    @property
    def free(self) -> bool:
        return self.verdict == "free"

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "verdict": self.verdict, "blocks": [b.to_json() for b in self.blocks]}


def block_from_json(d: dict) -> K24Certificate:
    kind = d["type"]
    if kind == "minor":
        return HasMinor(StandardMinorModel.from_json(d))
    if kind == "outerplanar":
        return Outerplanar(tuple(OuterWitness(tuple(w), "cycle") for w in d["witnesses"]))
    if kind == "three-sheets":
        return ThreeSheets(d["x"], d["y"], bool(d["xy_present"]), tuple(OuterWitness(tuple(w), "path") for w in d["sheets"]))
    if kind == "core-expansion":
        rep = tuple((norm_edge(*r["edge"]), OuterWitness(tuple(r["path"]), "path")) for r in d["replaced"])
        return CoreExpansion(d["core"], tuple(d["map"]), rep)
    raise GraphError(f"unknown certificate block type {kind!r}")


def certificate_from_json(d: dict) -> Certificate:
    if d.get("schema") != SCHEMA:
        raise GraphError(f"unsupported certificate schema {d.get('schema')!r}")
    return Certificate(d["verdict"], tuple(block_from_json(b) for b in d["blocks"]))


# -- structural decision for one block ----------------------------------------------

_MINOR = object()


def _sheet(h: Graph, comp: int, x: int, y: int) -> tuple[Graph, list[int]]:
    sub, back = h.induced(list(bits(comp)) + [x, y])
    pos = {v: i for i, v in enumerate(back)}
    if sub.has_edge(pos[x], pos[y]):
        sub = sub.delete_edge((pos[x], pos[y]))
    return sub, back


def _xy_witness(h: Graph, vertices: Sequence[int], x: int, y: int, drop_xy: bool) -> OuterWitness | None:
    sub, back = h.induced(vertices)
    pos = {v: i for i, v in enumerate(back)}
    if drop_xy and sub.has_edge(pos[x], pos[y]):
        sub = sub.delete_edge((pos[x], pos[y]))
    w = is_xy_outerplanar(sub, pos[x], pos[y])
    return None if w is None else w.remap(back)


def _explicit_fan_model(h: Graph, x: int, y: int, comps: list[int]) -> StandardMinorModel:
    """x alone against y plus path interiors, one path per component."""
    r2 = {y}
    s = set()
    for comp in comps[:4]:
        path = _shortest_path(h, x, y, comp)
        s.add(path[1])
        r2.update(path[2:-1])
    return StandardMinorModel(frozenset([x]), frozenset(r2), frozenset(s), 4)


def _shortest_path(h: Graph, a: int, b: int, inner: int) -> list[int]:
    allowed = inner | (1 << a) | (1 << b)
    prev = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for v in frontier:
            for w in bits(h.adj[v] & allowed):
                if w not in prev and not (v == a and w == b):
                    prev[w] = v
                    nxt.append(w)
        frontier = nxt
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def _core_match(h: Graph, vertices: list[int], marked: dict[Edge, frozenset[int]], original: Graph) -> object:
    """Match the reduced graph against the catalog and check the marked set."""
    pos = {v: i for i, v in enumerate(vertices)}
    hit = match_catalog(h)
    if hit is None:
        return _MINOR
    cid, perm = hit
    inv = {perm[i]: i for i in range(h.n)}
    need = frozenset(norm_edge(inv[pos[a]], inv[pos[b]]) for a, b in marked)
    if not any(need <= f for f in maximal_subdividable_sets(cid)):
        return _MINOR
    phi = tuple(vertices[perm[i]] for i in range(h.n))
    replaced = []
    for a, b in sorted(need):
        xa, xb = phi[a], phi[b]
        strip = marked[norm_edge(xa, xb)]
        w = _xy_witness(original, sorted(strip), xa, xb, drop_xy=False)
        if w is None:
            raise RecognizerError("strip lost its xy-outerplanarity")
        replaced.append(((a, b), w))
    return CoreExpansion(cid, phi, tuple(replaced))


def _strip_reduce(h: Graph) -> object:
    """Case (iii): peel xy-outerplanar strips off 2-cuts, innermost first."""
    alive = set(range(h.n))
    marked: dict[Edge, frozenset[int]] = {}
    while True:
        vertices = sorted(alive)
        pos = {v: i for i, v in enumerate(vertices)}
        cur = Graph(
            len(vertices),
            {norm_edge(pos[a], pos[b]) for a, b in h.edges() if a in alive and b in alive}
            | {norm_edge(pos[a], pos[b]) for a, b in marked},
        )
        if cur.n <= 3:
            raise RecognizerError("strip reduction collapsed an outerplanar block")
        best = None
        for xi, yi, comps in two_cuts(cur):
            if len(comps) != 2:
                raise RecognizerError("reduced graph gained a 2-cut with three sides")
            x, y = vertices[xi], vertices[yi]
            for comp in sorted(comps, key=lambda c: c.bit_count()):
                side = {vertices[i] for i in bits(comp)} | {x, y}
                expanded = set(side)
                for (a, b), strip in marked.items():
                    if a in side and b in side and {a, b} != {x, y}:
                        expanded |= strip
                if _xy_witness(h, sorted(expanded), x, y, drop_xy=True) is not None:
                    best = ((x, y), side, expanded)
                    break
            if best is None:
                return _MINOR
            break
        if best is None:
            return _core_match(cur, vertices, marked, h)
        (x, y), side, expanded = best
        for v in side - {x, y}:
            alive.discard(v)
        for e in [e for e in marked if e[0] in side and e[1] in side and set(e) != {x, y}]:
            del marked[e]
        marked[norm_edge(x, y)] = frozenset(expanded)


def _block_structure(h: Graph) -> object:
    """Certificate for a block with no outer cycle, or _MINOR (or a ready model)."""
    if is_k_connected(h, 3):
        hit = match_catalog(h)
        if hit is None:
            return _MINOR
        cid, perm = hit
        return CoreExpansion(cid, tuple(perm), ())
    cuts = list(two_cuts(h))
    for x, y, comps in cuts:
        if len(comps) >= 4:
            return HasMinor(_explicit_fan_model(h, x, y, comps))
    for x, y, comps in cuts:
        if len(comps) == 3:
            sheets = []
            for comp in comps:
                w = _xy_witness(h, list(bits(comp)) + [x, y], x, y, drop_xy=True)
                if w is None:
                    return _MINOR
                sheets.append(w)
            sheets.sort(key=lambda w: w.ordering)
            return ThreeSheets(x, y, h.has_edge(x, y), tuple(sheets))
    return _strip_reduce(h)


def _block_is_free(h: Graph) -> bool:
    if h.n <= 3 or block_outer_cycle(h) is not None:
        return True
    res = _block_structure(h)
    return not (res is _MINOR or isinstance(res, HasMinor))


def is_k24_free(g: Graph) -> bool:
    """Structural verdict only (no certificate)."""
    for b in all_blocks(g):
        if len(b) > 3 and not _block_is_free(g.induced(b)[0]):
            return False
    return True


# -- minor witnesses --------------------------------------------------------------


def _lift_contraction(model: StandardMinorModel, before: Graph, e: Edge) -> StandardMinorModel:
    u, v = e
    back = [w for w in range(before.n) if w != v]
    r1 = {back[w] for w in model.r1}
    r2 = {back[w] for w in model.r2}
    s = {back[w] for w in model.s}
    if u in r1:
        r1.add(v)
    elif u in r2:
        r2.add(v)
    elif u in s:
        s.discard(u)
        m1, m2 = mask_of(r1), mask_of(r2)
        both = [w for w in (u, v) if before.adj[w] & m1 and before.adj[w] & m2]
        if both:
            s.add(both[0])
        else:
            a = u if before.adj[u] & m1 else v
            b = v if a == u else u
            r1.add(a)
            s.add(b)
    return StandardMinorModel(frozenset(r1), frozenset(r2), frozenset(s), model.t)


def _shrink_pass(cur: Graph, kind: str, steps: list) -> tuple[Graph, bool]:
    """One sweep of a single reduction kind, keeping each step that leaves a minor.

    A reduction rejected once stays rejected later (a minor of a free graph is
    free), so the sweep never revisits earlier positions.
    """
    i, moved = 0, False
    while cur.n > ORACLE_DIRECT_MAX:
        items = list(range(cur.n - 1, -1, -1)) if kind == "vertex" else cur.edges()
        if i >= len(items):
            break
        x = items[i]
        if kind == "vertex":
            h, keep = cur.remove_vertices([x])
            data: object = keep
        else:
            h = cur.contract_edge(x) if kind == "contract" else cur.delete_edge(x)
            data = x
        if is_k24_free(h):
            i += 1
            continue
        steps.append((kind, cur, data))
        cur, moved = h, True
    return cur, moved


def find_minor_model(g: Graph, budget: int | None = None) -> StandardMinorModel:
    """A K_{2,4} model for a graph already known to be non-free.

    Small graphs go straight to the oracle.  Larger ones are shrunk by vertex
    deletions, then edge contractions and deletions, each kept only while the
    structural test still reports a minor; the oracle's model on the small
    remainder is lifted back step by step.
    """
    steps: list[tuple[str, Graph, object]] = []
    cur = g
    changed = True
    while cur.n > ORACLE_DIRECT_MAX and changed:
        changed = False
        for kind in ("vertex", "contract", "edge"):
            cur, moved = _shrink_pass(cur, kind, steps)
            changed |= moved
    model = find_k2t_minor(cur, 4, budget)
    if model is None:
        raise RecognizerError("structural test reported a minor the oracle cannot find")
    for kind, before, data in reversed(steps):
        if kind == "vertex":
            model = model.remap(data)
        elif kind == "contract":
            model = _lift_contraction(model, before, data)
    if not verify_model(g, model):
        raise RecognizerError("lifted minor model does not verify")
    return model


# -- public API ---------------------------------------------------------------------


def recognize_block(h: Graph, budget: int | None = None) -> K24Certificate:
    """Certificate for a single block (K1, K2 or 2-connected), on its own indices."""
    if h.n <= 2:
        return Outerplanar((OuterWitness(tuple(range(h.n)), "cycle"),))
    w = block_outer_cycle(h)
    if w is not None:
        return Outerplanar((w,))
    res = _block_structure(h)
    if res is _MINOR:
        return HasMinor(find_minor_model(h, budget))
    return res


def recognize(g: Graph, budget: int | None = None) -> Certificate:
    """Certificate for ``g``: every block described, or one block's K_{2,4} model."""
    out = []
    for b in sorted(all_blocks(g), key=lambda s: sorted(s)):
        h, back = g.induced(b)
        cert = recognize_block(h, budget).remap(back)
        if isinstance(cert, HasMinor):
            return Certificate("minor", (cert,))
        out.append(cert)
    return Certificate("free", tuple(out))


# -- verification -----------------------------------------------------------------


def _local(g: Graph, cert: K24Certificate) -> tuple[Graph, K24Certificate] | None:
    vs = sorted(cert.vertices())
    if any(not (0 <= v < g.n) for v in vs):
        return None
    h, back = g.induced(vs)
    pos = {v: i for i, v in enumerate(back)}
    return h, cert.remap(pos)


def _is_catalog_core(cid: str) -> bool:
    spec = parse_family_id(cid)
    if spec is not None:
        return in_class_G(spec)
    return cid in EXCEPTION_NAMES


def _verify_sheets(h: Graph, c: ThreeSheets) -> bool:
    x, y = c.x, c.y
    if len(c.sheets) != 3 or x == y or c.xy_present != h.has_edge(x, y):
        return False
    owner = {}
    for i, w in enumerate(c.sheets):
        if len(w.ordering) < 3 or w.ordering[0] != x or w.ordering[-1] != y or w.kind != "path":
            return False
        for v in w.ordering[1:-1]:
            if v in owner or v in (x, y):
                return False
            owner[v] = i
    if len(owner) + 2 != h.n:
        return False
    for a, b in h.edges():
        sides = {owner[v] for v in (a, b) if v in owner}
        if len(sides) > 1:
            return False
    for w in c.sheets:
        sub, back = h.induced(w.ordering)
        pos = {v: i for i, v in enumerate(back)}
        if sub.has_edge(pos[x], pos[y]):
            sub = sub.delete_edge((pos[x], pos[y]))
        if not verify_witness(sub, w.remap(pos), (pos[x], pos[y])):
            return False
    return True


def _verify_expansion(h: Graph, c: CoreExpansion) -> bool:
    if not _is_catalog_core(c.core):
        return False
    core = named_graph(c.core)
    phi = list(c.phi)
    if len(phi) != core.n or len(set(phi)) != core.n:
        return False
    inv = {v: i for i, v in enumerate(phi)}
    owner: dict[int, int] = {}
    counted = set()
    seen_edges = set()
    for k, (e, w) in enumerate(c.replaced):
        a, b = e
        if not core.has_edge(a, b) or norm_edge(a, b) in seen_edges or w.kind != "path":
            return False
        seen_edges.add(norm_edge(a, b))
        order = list(w.ordering)
        if len(order) < 2 or {order[0], order[-1]} != {phi[a], phi[b]}:
            return False
        for v in order[1:-1]:
            if v in inv or v in owner:
                return False
            owner[v] = k
        if len(order) >= 3:
            counted.add(norm_edge(a, b))
        sub, back = h.induced(order)
        pos = {v: i for i, v in enumerate(back)}
        if not verify_witness(sub, w.remap(pos), (pos[order[0]], pos[order[-1]])):
            return False
    if len(inv) + len(owner) != h.n:
        return False
    for a, b in h.edges():
        if a in inv and b in inv:
            ca, cb = inv[a], inv[b]
            if not core.has_edge(ca, cb):
                return False
            continue
        ks = {owner[v] for v in (a, b) if v in owner}
        if len(ks) != 1:
            return False
        (k,) = ks
        span = set(c.replaced[k][1].ordering)
        if a not in span or b not in span:
            return False
    replaced_edges = {norm_edge(*e) for e, _ in c.replaced}
    for a, b in core.edges():
        if norm_edge(a, b) not in replaced_edges and not h.has_edge(phi[a], phi[b]):
            return False
    return any(counted <= f for f in maximal_subdividable_sets(c.core))


def verify_block_certificate(h: Graph, c: K24Certificate) -> bool:
    """Check a block certificate against ``h`` (same indices, ``h`` being that block)."""
    if isinstance(c, HasMinor):
        return c.model.t == 4 and verify_model(h, c.model)
    if c.vertices() != frozenset(range(h.n)):
        return False
    if isinstance(c, Outerplanar):
        return verify_outerplanar(h, c.witnesses)
    if isinstance(c, ThreeSheets):
        return _verify_sheets(h, c)
    if isinstance(c, CoreExpansion):
        return _verify_expansion(h, c)
    return False


def verify_certificate(g: Graph, c: Certificate | K24Certificate) -> bool:
    """Independent check of a certificate against ``g``."""
    if not isinstance(c, Certificate):
        loc = _local(g, c)
        return loc is not None and verify_block_certificate(*loc)
    if c.verdict == "minor":
        return len(c.blocks) >= 1 and any(isinstance(b, HasMinor) and verify_model(g, b.model) and b.model.t == 4
                                          for b in c.blocks)
    if c.verdict != "free":
        return False
    want = sorted(sorted(b) for b in all_blocks(g))
    got = sorted(sorted(b.vertices()) for b in c.blocks)
    if want != got:
        return False
    for b in c.blocks:
        if isinstance(b, HasMinor):
            return False
        loc = _local(g, b)
        if loc is None or not verify_block_certificate(*loc):
            return False
    return True


# -- corollaries ------------------------------------------------------------------


def _require_block(g: Graph) -> None:
    if g.n > 2 and not is_k_connected(g, 2):
        raise GraphError("expected a 2-connected graph")
    if g.n == 2 and not g.m:
        raise GraphError("expected a 2-connected graph")


def find_apex_set(g: Graph) -> frozenset[int]:
    """U with |U| <= 2 (<= 1 when planar) and g - U outerplanar."""
    _require_block(g)
    cert = recognize_block(g)
    if isinstance(cert, HasMinor):
        raise HasK24Minor(cert.model)
    if isinstance(cert, Outerplanar):
        return frozenset()
    if isinstance(cert, ThreeSheets):
        candidates = [(cert.x,), (cert.y,)]
    else:
        phi = cert.phi
        spec = parse_family_id(cert.core)
        first = [(phi[spec.n - 1],)] if spec is not None else []
        singles = [(phi[i],) for i in range(len(phi))]
        pairs = [(phi[i], phi[j]) for i in range(len(phi)) for j in range(i + 1, len(phi))]
        candidates = first + singles + pairs
    for u in candidates:
        if is_outerplanar(g.remove_vertices(u)[0]) is not None:
            return frozenset(u)
    raise RecognizerError("no apex set among the core vertices")


def is_planar_k24free(g: Graph) -> bool:
    """Planarity of a K_{2,4}-minor-free graph, read off the block certificates."""
    cert = recognize(g)
    if not cert.free:
        raise HasK24Minor(cert.blocks[0].model)
    return all(not (isinstance(b, CoreExpansion) and b.core in NONPLANAR_EXCEPTIONS) for b in cert.blocks)
