"""Conformance checks: oracle agreement, counting, edge bounds, catalog replays.

Each check returns a plain report dataclass; ``ok`` tells whether it passed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .catalog import (
    EDGE_CLASS_REPS,
    FamilySpec,
    HASSE_FACTS,
    build_family,
    catalog_ids,
    check_fact,
    enumerate_3connected,
    family_members,
    in_class_G,
    maximal_subdividable_sets,
    named_graph,
    table1_instances,
)
from .core_graph import Edge, Graph, GraphError, bits, emit_graph6, is_k_connected, norm_edge, parse_graph6, two_cuts
from .iso import are_isomorphic, automorphisms, set_orbit
from .minor_oracle import OracleBudgetExceeded, find_k2t_minor, find_rooted_k2t_minor
from .hamilton import hamilton_cycle_3conn, hamilton_path_2conn, verify_hamilton
from .outerplanar import is_outerplanar
from .recognizer import find_apex_set, is_k24_free, is_planar_k24free, recognize, verify_certificate


# -- subdividable sets by brute force ---------------------------------------------------


def subdividable_bruteforce(g: Graph, budget: int | None = None) -> tuple[list[frozenset[Edge]], int]:
    """All maximal subdividable edge sets of ``g`` and the number of oracle calls.

    Subdividability is closed under subsets (a subdivision of fewer edges is a
    contraction of the full one), so sets are grown level by level and a set is
    tested only when all its one-smaller subsets passed.
    """
    edges = g.edges()
    good_prev = {frozenset()}
    calls = 0
    maximal: list[frozenset[Edge]] = []
    if find_k2t_minor(g, 4, budget) is not None:
        return [], 1
    while good_prev:
        good_next = set()
        extended = set()
        for f in sorted(good_prev, key=sorted):
            for e in edges:
                if e in f or (f and e < max(f)):
                    continue
                cand = f | {e}
                if any(cand - {d} not in good_prev for d in cand):
                    continue
                calls += 1
                if find_k2t_minor(g.subdivide_edges(sorted(cand)), 4, budget) is None:
                    good_next.add(cand)
        for f in good_next:
            extended.update(f - {d} for d in f)
        maximal.extend(f for f in good_prev if f not in extended)
        good_prev = good_next
    return sorted(maximal, key=lambda f: (len(f), sorted(f))), calls


@dataclass
class SubdividableReport:
    id: str
    declared: list[frozenset[Edge]]
    found: list[frozenset[Edge]]
    oracle_calls: int
    converse_witness: frozenset[Edge] | None = None

    @property
    def ok(self) -> bool:
        return set(self.declared) == set(self.found)


def converse_failure(g: Graph, sets: Sequence[frozenset[Edge]]) -> frozenset[Edge] | None:
    """A non-subdividable pair of individually subdividable edges, if any."""
    single = {e for f in sets for e in f}
    for a, b in combinations(sorted(single), 2):
        if not any({a, b} <= f for f in sets):
            return frozenset({a, b})
    return None


def check_subdividable_bruteforce(cid: str, max_order: int = 7, budget: int | None = None) -> SubdividableReport:
    g = named_graph(cid)
    if g.n > max_order:
        raise ValueError(f"{cid} has order {g.n} > {max_order}")
    declared = maximal_subdividable_sets(cid)
    found, calls = subdividable_bruteforce(g, budget)
    return SubdividableReport(cid, declared, found, calls, converse_failure(g, found))


def symmetric_copies(cid: str) -> list[int]:
    """Sizes of the automorphism orbits into which the maximal sets fall."""
    g = named_graph(cid)
    auts = list(automorphisms(g))
    sets = set(maximal_subdividable_sets(cid))
    sizes = []
    while sets:
        f = min(sets, key=sorted)
        orb = set_orbit(g, f, auts)
        sizes.append(len(orb))
        sets -= orb
    return sorted(sizes)


# -- corpus agreement ------------------------------------------------------------


@dataclass
class CompareReport:
    checked: int = 0
    free: int = 0
    disagreements: list[int] = field(default_factory=list)
    bad_certificates: list[int] = field(default_factory=list)
    over_budget: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.disagreements or self.bad_certificates or self.over_budget)


def compare_corpus(graphs: Iterable[Graph], budget: int | None = None, certify: bool = True) -> CompareReport:
    """Recognizer verdict vs oracle verdict for every graph (indices in input order)."""
    rep = CompareReport()
    for i, g in enumerate(graphs):
        rep.checked += 1
        try:
            oracle_free = find_k2t_minor(g, 4, budget) is None
        except OracleBudgetExceeded:
            rep.over_budget.append(i)
            continue
        if certify:
            cert = recognize(g, budget)
            ours = cert.free
            if not verify_certificate(g, cert):
                rep.bad_certificates.append(i)
        else:
            ours = is_k24_free(g)
        rep.free += ours
        if ours != oracle_free:
            rep.disagreements.append(i)
    return rep


def rooted_split_holds(g: Graph) -> bool:
    """Every 2-separation of a graph with a K_{2,4} minor satisfies one disjunct."""
    if find_k2t_minor(g, 4) is None:
        return True
    for x, y, comps in two_cuts(g):
        for comp in comps:
            hside = set(bits(comp)) | {x, y}
            jside = set(range(g.n)) - set(bits(comp))
            parts = []
            for side in (hside, jside):
                sub, back = g.induced(side)
                pos = {v: i for i, v in enumerate(back)}
                parts.append((sub, pos))
            ok = False
            for sub, pos in parts:
                plus = sub.add_edges([(pos[x], pos[y])])
                if find_k2t_minor(plus, 4) is not None:
                    ok = True
            if not ok:
                (h, ph), (j, pj) = parts
                for t1 in (1, 2, 3):
                    if (find_rooted_k2t_minor(h, ph[x], ph[y], t1) is not None
                            and find_rooted_k2t_minor(j, pj[x], pj[y], 4 - t1) is not None):
                        ok = True
                        break
            if not ok:
                return False
    return True


# -- counting and edge bounds ----------------------------------------------------------


@dataclass
class CountReport:
    n: int
    expected: int | None
    actual: int
    family: int
    exceptions: int
    pairwise_nonisomorphic: bool

    @property
    def ok(self) -> bool:
        return self.pairwise_nonisomorphic and (self.expected is None or self.expected == self.actual)


def check_counting(n: int) -> CountReport:
    ids = catalog_ids(n)
    graphs = enumerate_3connected(n)
    distinct = all(are_isomorphic(a, b) is None for a, b in combinations(graphs, 2))
    fam = sum(1 for cid in ids if cid.startswith("G"))
    expected = 2 * n - 8 if n >= 9 else None
    return CountReport(n, expected, len(graphs), fam, len(ids) - fam, distinct)


def dense_witness(n: int) -> Graph:
    """A 2-connected K_{2,4}-minor-free graph with 2n - 1 edges (n >= 6).

    G+_{6,2,3} has 11 = 2*6 - 1 edges and its spine edge v1v2 is subdividable;
    replacing that edge by a triangulated strip (a maximal outerplanar graph
    containing v1v2) adds two edges per added vertex.
    """
    if n < 6:
        raise ValueError("needs n >= 6")
    base = build_family(FamilySpec(6, 2, 3, True))
    extra = n - 6
    edges = set(base.edges())
    prev2, prev1 = 0, 1
    for k in range(extra):
        z = 6 + k
        edges.add(norm_edge(prev2, z))
        edges.add(norm_edge(prev1, z))
        prev2, prev1 = prev1, z
    return Graph(n, sorted(edges))


@dataclass
class EdgeBoundRow:
    n: int
    max_3conn: int
    argmax: str
    witness_edges: int
    witness_free: bool
    random_max: int

    @property
    def ok_3conn(self) -> bool:
        return self.n < 7 or self.max_3conn == 2 * self.n - 2

    @property
    def ok_2conn(self) -> bool:
        return self.n < 6 or (self.witness_edges == 2 * self.n - 1 and self.witness_free and self.random_max <= 2 * self.n - 1)


def random_block(n: int, rng: random.Random, p: float) -> Graph | None:
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    g = Graph(n, edges)
    return g if is_k_connected(g, 2) else None


def check_edge_bounds(ns: Iterable[int], seed: int = 0, samples: int = 40) -> list[EdgeBoundRow]:
    rng = random.Random(seed)
    rows = []
    for n in ns:
        best, arg = -1, ""
        for cid in catalog_ids(n):
            m = named_graph(cid).m
            if m > best:
                best, arg = m, cid
        w = dense_witness(n) if n >= 6 else None
        wfree = w is not None and is_k_connected(w, 2) and is_k24_free(w)
        if wfree and n <= 10:
            wfree = find_k2t_minor(w, 4) is None
        rmax = 0
        for _ in range(samples):
            g = random_block(n, rng, rng.uniform(0.15, 0.6))
            if g is not None and is_k24_free(g):
                rmax = max(rmax, g.m)
        rows.append(EdgeBoundRow(n, best, arg, w.m if w is not None else 0, wfree, rmax))
    return rows


# -- random strip expansions ----------------------------------------------------------


def random_strip(rng: random.Random, max_vertices: int = 6) -> tuple[Graph, int, int]:
    """A random xy-outerplanar graph (x = 0, y = last) on 2..max_vertices vertices.

    The outer path is 0 1 .. k; chords are a random subset of a random
    triangulation of the polygon closed by xy, so they never cross.  The xy
    edge itself is present with probability one half.
    """
    k = rng.randint(1, max_vertices - 1)
    edges = {(i, i + 1) for i in range(k)}
    chords: list[Edge] = []
    stack = [(0, k)]
    while stack:
        a, b = stack.pop()
        if b - a < 2:
            continue
        c = rng.randint(a + 1, b - 1)
        for u, v in ((a, c), (c, b)):
            if v - u >= 2:
                chords.append((u, v))
            stack.append((u, v))
    edges.update(e for e in chords if rng.random() < 0.6)
    if k >= 2 and rng.random() < 0.5:
        edges.add((0, k))
    return Graph(k + 1, sorted(edges)), 0, k


def expand_edges(core: Graph, strips: dict[Edge, tuple[Graph, int, int]]) -> Graph:
    """Replace each core edge xy in ``strips`` by its strip, gluing strip x, y onto core x, y."""
    edges = {e for e in core.edges() if e not in strips}
    n = core.n
    for (a, b), (h, hx, hy) in sorted(strips.items()):
        ids = {}
        for v in range(h.n):
            if v == hx:
                ids[v] = a
            elif v == hy:
                ids[v] = b
            else:
                ids[v] = n
                n += 1
        edges.update(norm_edge(ids[u], ids[v]) for u, v in h.edges())
    return Graph(n, sorted(edges))


def random_expansion(rng: random.Random, max_core: int = 12, max_strip: int = 6) -> tuple[str, Graph]:
    """A random K_{2,4}-minor-free 2-connected graph of case (ii) or (iii) shape.

    Case (ii): three random strips glued on x, y, plus xy with probability one
    half.  Case (iii): a random catalog core, a random maximal subdividable
    set, a random nonempty part of it replaced by strips.
    """
    if rng.random() < 0.25:
        sheets = []
        for _ in range(3):
            h, x, y = random_strip(rng, max_strip)
            while h.n < 3:
                h, x, y = random_strip(rng, max_strip)
            sheets.append((h.delete_edge((x, y)) if h.has_edge(x, y) else h, x, y))
        n, edges = 2, set()
        for h, x, y in sheets:
            ids = {x: 0, y: 1}
            for v in range(h.n):
                if v not in ids:
                    ids[v] = n
                    n += 1
            edges.update(norm_edge(ids[u], ids[v]) for u, v in h.edges())
        if rng.random() < 0.5:
            edges.add((0, 1))
        return "three-sheets", Graph(n, sorted(edges))
    n = rng.randint(4, max_core)
    cid = rng.choice(catalog_ids(n))
    core = named_graph(cid)
    sets = maximal_subdividable_sets(cid)
    f = sorted(rng.choice(sets))
    if not f:
        return cid, core
    chosen = rng.sample(f, rng.randint(1, len(f)))
    strips = {}
    for e in chosen:
        h, x, y = random_strip(rng, max_strip)
        while h.n < 3:
            h, x, y = random_strip(rng, max_strip)
        strips[e] = (h, x, y)
    return cid, expand_edges(core, strips)


# -- catalog replays -------------------------------------------------------------------


@dataclass
class ReplayFailure:
    what: str
    detail: str


def replay_hasse() -> list[ReplayFailure]:
    out = []
    for f in HASSE_FACTS:
        if not check_fact(named_graph(f.graph), f):
            out.append(ReplayFailure(f"{f.graph} {f.op} {f.select}", f"expected {f.result or 'loss of 3-connectivity'}"))
    for name, reps in EDGE_CLASS_REPS.items():
        g = named_graph(name)
        auts = list(automorphisms(g))
        orbit = {e: min(norm_edge(p[e[0]], p[e[1]]) for p in auts) for e in g.edges()}
        rep_orbits = {orbit.get(norm_edge(a - 1, b - 1)) for a, b in reps}
        if None in rep_orbits or len(rep_orbits) != len(reps) or len(set(orbit.values())) != len(reps):
            out.append(ReplayFailure(f"{name} edge classes", f"representatives {reps} do not cover the orbits"))
    return out


def replay_table1(ns: Iterable[int] = range(6, 11)) -> tuple[int, list[ReplayFailure]]:
    checked = 0
    out = []
    for n in ns:
        for spec in family_members(n):
            if spec.r < 2 or spec.s < 2:
                continue
            for label, (a, b), expected, three in table1_instances(spec):
                checked += 1
                got = build_family(spec).contract_edge((a - 1, b - 1))
                if are_isomorphic(got, expected) is None:
                    out.append(ReplayFailure(f"{spec.id} / v{a}v{b}", f"row {label}: result class differs"))
                elif is_k_connected(got, 3) != three:
                    out.append(ReplayFailure(f"{spec.id} / v{a}v{b}", f"row {label}: 3-connectivity differs"))
    return checked, out


def class_membership_mismatches(ns: Iterable[int] = range(5, 11)) -> tuple[int, list[str]]:
    checked = 0
    bad = []
    for n in ns:
        for r in range(n - 2):
            for s in range(n - 2):
                for plus in (False, True):
                    spec = FamilySpec(n, r, s, plus)
                    g = build_family(spec)
                    checked += 1
                    truth = is_k_connected(g, 3) and find_k2t_minor(g, 4) is None
                    if truth != in_class_G(spec):
                        bad.append(spec.id)
    return checked, bad


# -- hamiltonicity and apex ------------------------------------------------------------


@dataclass
class HamiltonReport:
    cycles_checked: int = 0
    paths_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_hamilton(max_n: int = 30, samples: int = 200, seed: int = 0) -> HamiltonReport:
    """Cycles for every catalog graph of order <= max_n; paths for random expansions."""
    rep = HamiltonReport()
    for n in range(4, max_n + 1):
        for cid, g in zip(catalog_ids(n), enumerate_3connected(n)):
            rep.cycles_checked += 1
            try:
                ok = verify_hamilton(g, hamilton_cycle_3conn(g))
            except GraphError as exc:
                ok = False
                cid = f"{cid} ({exc})"
            if not ok:
                rep.failures.append(f"cycle {cid}")
    rng = random.Random(seed)
    for i in range(samples):
        kind, g = random_expansion(rng)
        rep.paths_checked += 1
        try:
            ok = verify_hamilton(g, hamilton_path_2conn(g))
        except GraphError as exc:
            ok = False
            kind = f"{kind} ({exc})"
        if not ok:
            rep.failures.append(f"path #{i} {kind}: {emit_graph6(g)}")
    return rep


@dataclass
class ApexReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def apex_holds(g: Graph) -> bool:
    u = find_apex_set(g)
    rest, _ = g.remove_vertices(sorted(u))
    limit = 1 if is_planar_k24free(g) else 2
    return len(u) <= limit and is_outerplanar(rest) is not None


def check_apex(graphs: Iterable[Graph], max_catalog_n: int = 15) -> ApexReport:
    """Apex sets for every free block among ``graphs`` and every catalog graph up to max_catalog_n."""
    rep = ApexReport()
    for i, g in enumerate(graphs):
        if g.n >= 3 and is_k_connected(g, 2) and is_k24_free(g):
            rep.checked += 1
            if not apex_holds(g):
                rep.failures.append(f"corpus #{i}")
    for n in range(4, max_catalog_n + 1):
        for cid, g in zip(catalog_ids(n), enumerate_3connected(n)):
            rep.checked += 1
            if not apex_holds(g):
                rep.failures.append(cid)
    return rep


# -- corpora and the suite runner ---------------------------------------------------------


def random_corpus(count: int, seed: int = 0, max_n: int = 10) -> list[Graph]:
    """Fallback when no exhaustive corpus is at hand: G(n, p) samples kept when 2-connected."""
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        g = random_block(rng.randint(4, max_n), rng, rng.uniform(0.2, 0.7))
        if g is not None:
            out.append(g)
    return out


def _compare_chunk(args: tuple[list[str], int | None]) -> CompareReport:
    lines, budget = args
    return compare_corpus([parse_graph6(s) for s in lines], budget)


def compare_corpus_parallel(graphs: Sequence[Graph], budget: int | None = None, jobs: int = 1) -> CompareReport:
    """compare_corpus over a process pool; indices and ordering match the serial run."""
    if jobs <= 1 or len(graphs) < 2 * jobs:
        return compare_corpus(graphs, budget)
    from multiprocessing import Pool

    size = -(-len(graphs) // (jobs * 4))
    chunks = [[emit_graph6(g) for g in graphs[i:i + size]] for i in range(0, len(graphs), size)]
    with Pool(jobs) as pool:
        parts = pool.map(_compare_chunk, [(c, budget) for c in chunks])
    rep = CompareReport()
    for k, part in enumerate(parts):
        off = k * size
        rep.checked += part.checked
        rep.free += part.free
        rep.disagreements += [off + i for i in part.disagreements]
        rep.bad_certificates += [off + i for i in part.bad_certificates]
        rep.over_budget += [off + i for i in part.over_budget]
    return rep


def run_suites(chosen: Sequence[str], corpus: Sequence[Graph] | None = None, seed: int = 0,
               jobs: int = 1, budget: int | None = None) -> dict:
    """Run the named suites and return a JSON-ready report."""
    out: dict[str, dict] = {}
    for name in chosen:
        if name == "compare":
            r = compare_corpus_parallel(list(corpus or []), budget, jobs)
            out[name] = {"ok": r.ok, "checked": r.checked, "free": r.free, "disagreements": r.disagreements,
                         "bad_certificates": r.bad_certificates, "over_budget": r.over_budget,
                         "summary": f"{r.checked} graphs, {r.free} free, {len(r.disagreements)} disagreements, "
                                    f"{len(r.bad_certificates)} bad certificates, {len(r.over_budget)} over budget"}
        elif name == "counting":
            rows = [check_counting(n) for n in range(4, 21)]
            bad = [r.n for r in rows if not r.ok]
            out[name] = {"ok": not bad, "rows": [vars(r) for r in rows],
                         "summary": f"n=4..20, formula 2n-8 checked for n>=9, mismatches at {bad or 'none'}"}
        elif name == "edges":
            rows = check_edge_bounds(range(5, 16), seed)
            bad3 = [r.n for r in rows if not r.ok_3conn]
            bad2 = [r.n for r in rows if not r.ok_2conn]
            out[name] = {"ok": not (bad3 or bad2), "rows": [dict(vars(r), ok_3conn=r.ok_3conn, ok_2conn=r.ok_2conn)
                                                            for r in rows],
                         "summary": f"3-connected max = 2n-2 fails at {bad3 or 'none'}; "
                                    f"2n-1 witnesses fail at {bad2 or 'none'}"}
        elif name == "table1":
            checked, fails = replay_table1()
            out[name] = {"ok": not fails, "checked": checked, "failures": [vars(f) for f in fails],
                         "summary": f"{checked} row instances, {len(fails)} failures"}
        elif name == "hasse":
            fails = replay_hasse()
            out[name] = {"ok": not fails, "checked": len(HASSE_FACTS), "failures": [vars(f) for f in fails],
                         "summary": f"{len(HASSE_FACTS)} facts, {len(fails)} failures"}
        elif name == "subdividable":
            reps = [check_subdividable_bruteforce(cid, budget=budget) for n in range(4, 8) for cid in catalog_ids(n)]
            bad = [r.id for r in reps if not r.ok]
            out[name] = {"ok": not bad, "graphs": [r.id for r in reps], "mismatches": bad,
                         "oracle_calls": sum(r.oracle_calls for r in reps),
                         "summary": f"{len(reps)} catalog graphs of order <= 7, mismatches: {bad or 'none'}"}
        elif name == "hamilton":
            r = check_hamilton(seed=seed)
            out[name] = {"ok": r.ok, "cycles": r.cycles_checked, "paths": r.paths_checked, "failures": r.failures,
                         "summary": f"{r.cycles_checked} cycles, {r.paths_checked} paths, {len(r.failures)} failures"}
        elif name == "apex":
            r = check_apex(corpus or [])
            out[name] = {"ok": r.ok, "checked": r.checked, "failures": r.failures,
                         "summary": f"{r.checked} graphs, {len(r.failures)} failures"}
        else:
            raise ValueError(f"unknown suite {name!r}")
    return {"ok": all(p["ok"] for p in out.values()), "seed": seed, "suites": out}
