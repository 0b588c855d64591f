"""Simple finite graphs on at most 64 vertices.

Vertices are indices 0..n-1 with string labels; adjacency is stored as one
bitmask per vertex, which keeps the set-heavy operations (closed
neighborhoods, induced subgraphs, independence tests) cheap enough for the
exhaustive searches done elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


class InvalidVertexError(GraphError):
    pass


class NotIndependentError(GraphError):
    """Raised when a vertex set that must be independent has an edge."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``adj[v]`` is the neighbor bitmask of v."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if n > 64:
            raise GraphError(f"at most 64 vertices supported, got {n}")
        if len(self.adj) != n:
            raise GraphError("labels and adjacency rows disagree in length")
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels must be distinct")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row of vertex {v} leaves the vertex range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at ({v}, {u})")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} not in range 0..{self.n - 1}")

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidVertexError(f"no vertex labelled {label!r}") from None

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if u > v:
                    out.append((v, u))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(self.labels[u], self.labels[v]) for u, v in self.edges()]


def graph(labels: Iterable[str], edges: Iterable[tuple] = ()) -> Graph:
    """Build a :class:`Graph` from labels and edges.

    Edge endpoints may be given as indices or as labels.
    """
    labels = tuple(labels)
    lookup = {lab: i for i, lab in enumerate(labels)}
    rows = [0] * len(labels)

    def resolve(end) -> int:
        if isinstance(end, str):
            if end not in lookup:
                raise InvalidVertexError(f"no vertex labelled {end!r}")
            return lookup[end]
        v = int(end)
        if not 0 <= v < len(labels):
            raise InvalidVertexError(f"vertex {v} not in range 0..{len(labels) - 1}")
        return v

    for a, b in edges:
        u, v = resolve(a), resolve(b)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(labels, tuple(rows))


def standard_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def neighbors_closed(g: Graph, s: frozenset[int] | Iterable[int]) -> frozenset[int]:
    """Closed neighborhood N[s]: the vertices of s together with all their neighbors."""
    m = 0
    for v in s:
        g.check_vertex(v)
        m |= g.adj[v] | (1 << v)
    return frozenset(bits(m))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    if m & ~g.full_mask:
        raise InvalidVertexError("vertex out of range")
    return all(g.adj[v] & m == 0 for v in bits(m))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on ``keep``; labels survive, indices are re-packed densely."""
    kept = sorted(set(keep))
    for v in kept:
        g.check_vertex(v)
    pos = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in bits(g.adj[v]):
            if u in pos:
                row |= 1 << pos[u]
        rows.append(row)
    return Graph(tuple(g.labels[v] for v in kept), tuple(rows))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    drop = set(s)
    return induced_subgraph(g, (v for v in g.vertices() if v not in drop))


def delete_closed_neighborhood(g: Graph, s: frozenset[int] | Iterable[int]) -> Graph:
    """The induced subgraph on V minus N[s].  ``s`` must be independent."""
    s = frozenset(s)
    if not is_independent(g, s):
        raise NotIndependentError(f"vertex set {sorted(s)} is not independent")
    closed = neighbors_closed(g, s)
    return induced_subgraph(g, (v for v in g.vertices() if v not in closed))


def is_simplicial_vertex(g: Graph, v: int) -> bool:
    """True when the open neighborhood of v induces a complete graph."""
    g.check_vertex(v)
    nbrs = g.adj[v]
    for u in bits(nbrs):
        if nbrs & ~g.adj[u] & ~(1 << u):
            return False
    return True


def _simplicial_in_mask(adj: tuple[int, ...], mask: int, v: int) -> bool:
    nbrs = adj[v] & mask
    for u in bits(nbrs):
        if nbrs & ~adj[u] & ~(1 << u):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    """Chordality via greedy simplicial elimination.

    A graph is chordal iff repeatedly deleting a simplicial vertex empties it;
    the order in which simplicial vertices are removed does not matter.
    """
    mask = g.full_mask
    while mask:
        for v in bits(mask):
            if _simplicial_in_mask(g.adj, mask, v):
                mask &= ~(1 << v)
                break
        else:
            return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


def is_totally_disconnected(g: Graph) -> bool:
    return all(row == 0 for row in g.adj)


def is_forest(g: Graph) -> bool:
    """Acyclic check: every component must satisfy edges = vertices - 1."""
    components = 0
    seen = 0
    for start in g.vertices():
        if seen >> start & 1:
            continue
        components += 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
    return g.edge_count() == g.n - components


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-color g, or return None if an odd cycle obstructs.

    Deterministic: the lowest-index vertex of every connected component goes
    on the first side.
    """
    color = [-1] * g.n
    for start in g.vertices():
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = frozenset(v for v in g.vertices() if color[v] == 0)
    side1 = frozenset(v for v in g.vertices() if color[v] == 1)
    return side0, side1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def add_whiskers(g: Graph, s: frozenset[int] | Iterable[int]) -> Graph:
    """Attach a pendant vertex z_<label> to every vertex in s."""
    s = sorted(set(s))
    for v in s:
        g.check_vertex(v)
    labels = list(g.labels)
    rows = list(g.adj)
    for v in s:
        tip = len(labels)
        labels.append(f"z_{g.labels[v]}")
        rows.append(1 << v)
        rows[v] |= 1 << tip
    return Graph(tuple(labels), tuple(rows))


# --- maximal independent sets -------------------------------------------------

def _mis_masks(adj: tuple[int, ...], universe: int) -> list[int]:
    """Maximal independent sets of the subgraph induced on ``universe``.

    Runs Bron–Kerbosch with pivoting on the complement graph (maximal
    independent sets are exactly the maximal cliques of the complement).
    The void graph has the empty set as its unique maximal independent set.
    """
    comp = []
    for v in range(len(adj)):
        comp.append(~adj[v] & universe & ~(1 << v))
    out: list[int] = []

    def extend(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda v: (comp[v] & p).bit_count())
        for v in bits(p & ~comp[pivot]):
            bit = 1 << v
            extend(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    extend(0, universe, 0)
    return out


def maximal_independent_sets(g: Graph) -> list[frozenset[int]]:
    """All maximal independent sets, sorted for reproducibility."""
    sets = [frozenset(bits(m)) for m in _mis_masks(g.adj, g.full_mask)]
    return sorted(sets, key=sorted)


def independent_set_masks(adj: tuple[int, ...], universe: int) -> list[int]:
    """Every independent subset of ``universe`` (the empty set included)."""
    verts = list(bits(universe))
    out = [0]

    def grow(i: int, current: int, forbidden: int) -> None:
        for j in range(i, len(verts)):
            v = verts[j]
            bit = 1 << v
            if forbidden & bit:
                continue
            out.append(current | bit)
            grow(j + 1, current | bit, forbidden | adj[v])

    grow(0, 0, 0)
    return out


def independent_sets(g: Graph) -> list[frozenset[int]]:
    """All independent sets ordered by (size, members); the empty set comes first."""
    sets = [frozenset(bits(m)) for m in independent_set_masks(g.adj, g.full_mask)]
    return sorted(sets, key=lambda s: (len(s), sorted(s)))
