"""Simple undirected graphs on dense vertex indices, stored as adjacency bitmasks.

Everything here is immutable: edit operations return new graphs.  Vertex ``v``
corresponds to bit ``1 << v`` in every mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for structurally invalid graph operations."""


class GraphFormatError(GraphError):
    """Malformed graph6 / edge-list input."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """An immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "labels", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError("negative order")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise GraphError("label count does not match order")
        self._hash = None

    @classmethod
    def from_masks(cls, adj: Sequence[int], labels: Sequence[str] | None = None) -> Graph:
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g.labels = tuple(labels) if labels is not None else None
        g._hash = None
        return g

    # -- basic queries -------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        out = []
        for u, a in enumerate(self.adj):
            for v in bits(a >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    def neighborhood(self, mask: int) -> int:
        """Vertices outside ``mask`` adjacent to some vertex of ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- connectivity ------------------------------------------------------

    def component_of(self, v: int, allowed: int) -> int:
        """The connected component of ``v`` inside the vertex set ``allowed``."""
        seen = 1 << v
        frontier = seen
        adj = self.adj
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self, allowed: int | None = None) -> list[int]:
        """Connected components (as masks) of the subgraph induced by ``allowed``."""
        if allowed is None:
            allowed = self.full
        comps = []
        rest = allowed
        while rest:
            v = (rest & -rest).bit_length() - 1
            c = self.component_of(v, allowed)
            comps.append(c)
            rest &= ~c
        return comps

    def is_connected_mask(self, mask: int) -> bool:
        if mask == 0:
            return True
        v = (mask & -mask).bit_length() - 1
        return self.component_of(v, mask) == mask

    def is_connected(self) -> bool:
        return self.is_connected_mask(self.full)

    # -- edits -------------------------------------------------------------

    def _require_edge(self, e: Sequence[int]) -> Edge:
        u, v = int(e[0]), int(e[1])
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not in graph")
        return norm_edge(u, v)

    def add_edges(self, edges: Iterable[Sequence[int]]) -> Graph:
        adj = list(self.adj)
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"cannot add edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph.from_masks(adj, self.labels)

    def delete_edge(self, e: Sequence[int]) -> Graph:
        u, v = self._require_edge(e)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_masks(adj, self.labels)

    def delete_edges(self, edges: Iterable[Sequence[int]]) -> Graph:
        g = self
        for e in edges:
            g = g.delete_edge(e)
        return g

    def contract_edge(self, e: Sequence[int]) -> Graph:
        """Merge the ends of ``e``; the merged vertex keeps the smaller index.

        Parallel edges collapse and the loop disappears; indices above the
        removed vertex shift down by one.
        """
        u, v = self._require_edge(e)
        keep = [w for w in range(self.n) if w != v]
        pos = {w: i for i, w in enumerate(keep)}
        edges = set()
        for a, b in self.edges():
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                edges.add(norm_edge(pos[a2], pos[b2]))
        labels = None
        if self.labels is not None:
            labels = [self.labels[w] for w in keep]
        return Graph(len(keep), sorted(edges), labels)

    def subdivide_edges(self, edges: Iterable[Sequence[int]]) -> Graph:
        """Replace each listed edge by a path of length 2 through a fresh vertex.

        Fresh vertices are appended in the order the edges are given.
        """
        es = [self._require_edge(e) for e in edges]
        if len(set(es)) != len(es):
            raise GraphError("duplicate edge in subdivision set")
        n = self.n
        new_edges = set(self.edges()) - set(es)
        for i, (u, v) in enumerate(es):
            z = n + i
            new_edges.add((u, z))
            new_edges.add((v, z))
        return Graph(n + len(es), sorted(new_edges))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices`` (sorted) and the new->old index map."""
        keep = sorted(set(vertices))
        pos = {w: i for i, w in enumerate(keep)}
        edges = [(pos[a], pos[b]) for a, b in self.edges() if a in pos and b in pos]
        labels = [self.labels[w] for w in keep] if self.labels is not None else None
        return Graph(len(keep), edges, labels), keep

    def remove_vertices(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        gone = set(vertices)
        return self.induced(w for w in range(self.n) if w not in gone)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation")
        return Graph(self.n, [(perm[a], perm[b]) for a, b in self.edges()])

    def disjoint_union(self, other: Graph) -> Graph:
        k = self.n
        return Graph(k + other.n, self.edges() + [(a + k, b + k) for a, b in other.edges()])


# -- standard small graphs ----------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(n: int) -> Graph:
    """W_n: hub ``n-1`` joined to the rim cycle ``0..n-2``."""
    if n < 4:
        raise GraphError("wheel needs at least 4 vertices")
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    return Graph(n, rim + [(i, n - 1) for i in range(n - 1)])


# -- connectivity and blocks --------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[frozenset[int]]
    cutvertices: frozenset[int]
    tree: list[tuple[int, int]]  # (block index, cutvertex) incidences

    def blocks_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def blocks(g: Graph) -> BlockDecomposition:
    """Blocks and cutvertices of a connected graph (iterative Hopcroft-Tarjan)."""
    if g.n == 0:
        return BlockDecomposition([], frozenset(), [])
    if not g.is_connected():
        raise GraphError("blocks() needs a connected graph")
    if g.n == 1:
        return BlockDecomposition([frozenset([0])], frozenset(), [])
    return _block_decomposition(g)


def _block_decomposition(g: Graph) -> BlockDecomposition:
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[frozenset[int]] = []
    cut: set[int] = set()
    counter = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if g.adj[root] == 0:
            found.append(frozenset([root]))
            continue
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (parent, v):
                        break
                found.append(frozenset(comp))
                if parent == root:
                    root_children += 1
                else:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    tree = [(i, c) for i, b in enumerate(found) for c in sorted(cut & b)]
    return BlockDecomposition(found, frozenset(cut), tree)


def all_blocks(g: Graph) -> list[frozenset[int]]:
    """Blocks of every component, isolated vertices included."""
    return _block_decomposition(g).blocks if g.n else []


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no vertex cut of size < k."""
    if k not in (1, 2, 3):
        raise GraphError("k must be 1, 2 or 3")
    if g.n <= k or not g.is_connected():
        return False
    full = g.full
    if k >= 2:
        for v in range(g.n):
            if not g.is_connected_mask(full & ~(1 << v)):
                return False
    if k == 3:
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.is_connected_mask(full & ~(1 << u) & ~(1 << v)):
                    return False
    return True


def two_cuts(g: Graph) -> Iterator[tuple[int, int, list[int]]]:
    """Yield ``(x, y, components)`` for every vertex pair whose removal disconnects ``g``."""
    full = g.full
    for x in range(g.n):
        for y in range(x + 1, g.n):
            rest = full & ~(1 << x) & ~(1 << y)
            if rest == 0:
                continue
            comps = g.components(rest)
            if len(comps) >= 2:
                yield x, y, comps


@dataclass(frozen=True)
class Separation:
    side_h: frozenset[int]
    side_j: frozenset[int]
    boundary: tuple[int, int]

    def is_valid(self, g: Graph) -> bool:
        h, j = self.side_h, self.side_j
        b = frozenset(self.boundary)
        if h | j != frozenset(range(g.n)) or h & j != b or len(b) != 2:
            return False
        if not (h - b) or not (j - b):
            return False
        return all(not (a in h - b and c in j - b) and not (c in h - b and a in j - b) for a, c in g.edges())


def two_separations(g: Graph) -> Iterator[Separation]:
    """2-separations (H, J): one side is a single component of G - {x, y}."""
    for x, y, comps in two_cuts(g):
        full = g.full
        for c in comps:
            h = frozenset(bits(c)) | {x, y}
            j = frozenset(bits(full & ~c))
            yield Separation(h, j, (x, y))


# -- text formats -------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    out = [_g6_size(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (aj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (optional ``>>graph6<<`` header, trailing newline ok)."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 line", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside 63..126", base + i)
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated size field", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8 or vals[1] != 63:
            raise GraphFormatError("malformed size field", base + 1)
        n = 0
        for k in range(2, 8):
            n = (n << 6) | vals[k]
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise GraphFormatError(f"truncated bit vector: need {need} bytes, got {len(body)}", base + len(vals))
    if len(body) > need:
        raise GraphFormatError("trailing bytes after bit vector", base + pos + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph.from_masks(adj)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: optional ``n N`` line, then ``u v`` per line.

    ``#`` starts a comment.  Without an ``n`` line the order is one more than
    the largest index mentioned.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n is not None or edges:
                raise GraphFormatError(f"line {lineno}: bad order declaration")
            n = _int(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: not an integer: {tok!r}") from None


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """Read graphs from text: graph6 is one per line, edge-list one per text."""
    if fmt == "auto":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        stripped = first.strip()
        fmt = "edges" if (stripped.startswith("#") or " " in stripped or stripped.isdigit()) else "g6"
    if fmt == "g6":
        return [parse_graph6(ln.strip()) for ln in text.splitlines() if ln.strip()]
    if fmt == "edges":
        return [parse_edge_list(text)]
    raise GraphFormatError(f"unknown format {fmt!r}")
