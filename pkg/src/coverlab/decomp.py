"""Vertex decomposability of independence complexes, phrased in graph terms.

A graph is vertex decomposable when it is edgeless, or when some vertex v is
a *shedding vertex* (no independent set of G - N[v] that is maximal there can
be extended to a maximal independent set of G avoiding N(v)) such that both
G - v and G - N[v] are again vertex decomposable.

From a decomposition we extract a shedding order (the deleted vertices) and
the independent remainder, and from those the spanning bipartite subgraph
whose edges join the remainder to the shedding vertices.  Layered powers of a
graph and their collapse identities live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Iterator

from .graphs import (
    Graph,
    GraphError,
    bipartition,
    bits,
    delete_closed_neighborhood,
    independent_set_masks,
    independent_sets,
    mask_of,
    _mis_masks,
    _simplicial_in_mask,
)


class NotVertexDecomposableError(GraphError):
    pass


class InvalidSheddingOrderError(GraphError):
    pass


class NotBipartiteError(GraphError):
    pass


def _closed(adj: tuple[int, ...], v: int) -> int:
    return adj[v] | 1 << v


def _is_shedding(adj: tuple[int, ...], mask: int, v: int) -> bool:
    # v sheds iff every maximal independent set of the graph induced on
    # mask - N[v] sees some neighbor u of v with N[u] disjoint from it;
    # otherwise that set extends to a maximal independent set avoiding N(v).
    nv = adj[v] & mask
    rest = mask & ~_closed(adj, v)
    for t in _mis_masks(adj, rest):
        if not any(adj[u] & t == 0 for u in bits(nv)):
            return False
    return True


def _edgeless(adj: tuple[int, ...], mask: int) -> bool:
    return all(adj[v] & mask == 0 for v in bits(mask))


def _vd(adj: tuple[int, ...], mask: int, memo: dict[int, bool]) -> bool:
    if mask in memo:
        return memo[mask]
    if _edgeless(adj, mask):
        memo[mask] = True
        return True
    result = False
    for v in bits(mask):
        if (
            _is_shedding(adj, mask, v)
            and _vd(adj, mask & ~(1 << v), memo)
            and _vd(adj, mask & ~_closed(adj, v), memo)
        ):
            result = True
            break
    memo[mask] = result
    return result


@lru_cache(maxsize=None)
def is_vertex_decomposable(g: Graph) -> bool:
    return _vd(g.adj, g.full_mask, {})


def is_shedding_vertex(g: Graph, v: int) -> bool:
    g.check_vertex(v)
    return _is_shedding(g.adj, g.full_mask, v)


@dataclass(frozen=True)
class SheddingDecomposition:
    """A shedding order together with the independent remainder it leaves."""

    graph: Graph
    shedding_order: tuple[int, ...]
    i_order: tuple[int, ...]


def validate_decomposition(d: SheddingDecomposition) -> None:
    """Check the defining conditions; raise InvalidSheddingOrderError if violated."""
    g = d.graph
    adj = g.adj
    claimed = list(d.shedding_order) + list(d.i_order)
    if sorted(claimed) != list(range(g.n)):
        raise InvalidSheddingOrderError("orders do not partition the vertex set")
    memo: dict[int, bool] = {}
    mask = g.full_mask
    for v in d.shedding_order:
        if not _is_shedding(adj, mask, v):
            raise InvalidSheddingOrderError(
                f"vertex {g.labels[v]} is not a shedding vertex at its turn"
            )
        mask &= ~(1 << v)
        if not _vd(adj, mask, memo):
            raise InvalidSheddingOrderError(
                f"deleting {g.labels[v]} leaves a graph that is not vertex decomposable"
            )
    if not _edgeless(adj, mask):
        raise InvalidSheddingOrderError("the remainder is not totally disconnected")


def shedding_decomposition(g: Graph) -> SheddingDecomposition:
    """Deterministic decomposition of a vertex decomposable graph.

    At every step the next shedding vertex is chosen among those whose
    deletion stays vertex decomposable, preferring vertices adjacent to a
    simplicial vertex and breaking ties by lowest index.
    """
    if not is_vertex_decomposable(g):
        raise NotVertexDecomposableError("graph is not vertex decomposable")
    adj = g.adj
    memo: dict[int, bool] = {}
    mask = g.full_mask
    order: list[int] = []
    while not _edgeless(adj, mask):
        simp_adjacent = 0
        for s in bits(mask):
            if _simplicial_in_mask(adj, mask, s):
                simp_adjacent |= adj[s] & mask
        candidates = [
            v
            for v in bits(mask)
            if _is_shedding(adj, mask, v) and _vd(adj, mask & ~(1 << v), memo)
        ]
        if not candidates:
            raise AssertionError("no shedding candidate in a vertex decomposable graph")
        pick = next((v for v in candidates if simp_adjacent >> v & 1), candidates[0])
        order.append(pick)
        mask &= ~(1 << pick)
    return SheddingDecomposition(g, tuple(order), tuple(bits(mask)))


def enumerate_decompositions(g: Graph, limit: int | None = None) -> Iterator[SheddingDecomposition]:
    """Yield every decomposition the construction can produce (DFS order)."""
    if not is_vertex_decomposable(g):
        raise NotVertexDecomposableError("graph is not vertex decomposable")
    adj = g.adj
    memo: dict[int, bool] = {}

    def rec(mask: int, prefix: tuple[int, ...]) -> Iterator[SheddingDecomposition]:
        if _edgeless(adj, mask):
            yield SheddingDecomposition(g, prefix, tuple(bits(mask)))
            return
        for v in bits(mask):
            if _is_shedding(adj, mask, v) and _vd(adj, mask & ~(1 << v), memo):
                yield from rec(mask & ~(1 << v), prefix + (v,))

    it = rec(g.full_mask, ())
    return it if limit is None else islice(it, limit)


def build_bg(d: SheddingDecomposition) -> Graph:
    """Spanning bipartite subgraph: the source edges joining remainder to shedding order."""
    validate_decomposition(d)
    g = d.graph
    alpha = mask_of(d.shedding_order)
    gamma = mask_of(d.i_order)
    rows = [0] * g.n
    for v in bits(alpha):
        row = g.adj[v] & gamma
        rows[v] = row
        for u in bits(row):
            rows[u] |= 1 << v
    return Graph(g.labels, tuple(rows))


# --- layered powers -----------------------------------------------------------


@dataclass(frozen=True)
class LayeredGraph:
    """k layered copies of a base graph.

    Vertex (i, p) stands for layer p of base vertex i, p = 1..k; two layered
    vertices are adjacent exactly when their base vertices are adjacent and
    the layer indices satisfy p + q <= k + 1.
    """

    base: Graph
    k: int
    graph: Graph

    def vertex(self, i: int, p: int) -> int:
        if not 1 <= p <= self.k:
            raise GraphError(f"layer {p} out of range 1..{self.k}")
        self.base.check_vertex(i)
        return i * self.k + (p - 1)

    def base_of(self, idx: int) -> tuple[int, int]:
        self.graph.check_vertex(idx)
        i, p0 = divmod(idx, self.k)
        return i, p0 + 1


def build_gk(g: Graph, k: int) -> LayeredGraph:
    if k < 1:
        raise GraphError(f"layer count must be at least 1, got {k}")
    labels = []
    for lab in g.labels:
        labels.extend(f"{lab}_{p}" for p in range(1, k + 1))
    rows = [0] * (g.n * k)
    for i, j in g.edges():
        for p in range(1, k + 1):
            for q in range(1, k + 2 - p):
                a = i * k + (p - 1)
                b = j * k + (q - 1)
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return LayeredGraph(g, k, Graph(tuple(labels), tuple(rows)))


def _shift_layer_label(label: str, down: int = 1) -> str:
    name, p = label.rsplit("_", 1)
    return f"{name}_{int(p) - down}"


def _label_edge_set(g: Graph) -> set[frozenset[str]]:
    return {frozenset((a, b)) for a, b in g.edge_labels()}


def layer_collapse_check(g: Graph, k: int) -> bool:
    """Deleting N[top layer] of the k-layered graph must leave the (k-2)-layered one.

    Checked as literal edge-set equality after shifting every surviving layer
    index down by one; vertex bookkeeping for isolated base vertices is
    deliberately ignored since they carry no edges.
    """
    if k < 3:
        raise GraphError("layer collapse requires k >= 3")
    lay = build_gk(g, k)
    top = frozenset(lay.vertex(i, k) for i in range(g.n))
    reduced = delete_closed_neighborhood(lay.graph, top)
    mapped = {
        frozenset((_shift_layer_label(a), _shift_layer_label(b)))
        for a, b in reduced.edge_labels()
    }
    return mapped == _label_edge_set(build_gk(g, k - 2).graph)


def layer_collapse_check_bipartite(g: Graph, k: int) -> bool:
    """One-sided collapse for bipartite graphs: drop N[top layer of one side].

    Layers of the first side keep their index, layers of the other side shift
    down by one, and the result must equal the (k-1)-layered graph.
    """
    if k < 2:
        raise GraphError("one-sided layer collapse requires k >= 2")
    parts = bipartition(g)
    if parts is None:
        raise NotBipartiteError("graph is not bipartite")
    x_side, _ = parts
    lay = build_gk(g, k)
    top = frozenset(lay.vertex(i, k) for i in x_side)
    reduced = delete_closed_neighborhood(lay.graph, top)
    keep = {g.labels[i] for i in x_side}

    def move(label: str) -> str:
        name, p = label.rsplit("_", 1)
        return label if name in keep else f"{name}_{int(p) - 1}"

    mapped = {frozenset((move(a), move(b))) for a, b in reduced.edge_labels()}
    return mapped == _label_edge_set(build_gk(g, k - 1).graph)


# --- graph classes entering the classification --------------------------------


def is_w_graph(g: Graph) -> bool:
    """True when G - N[A] is empty or has a simplicial vertex for every independent A.

    The empty set participates, so the graph itself must already contain a
    simplicial vertex (unless it has no vertices at all).
    """
    adj = g.adj
    for a_mask in independent_set_masks(adj, g.full_mask):
        closed = a_mask
        for v in bits(a_mask):
            closed |= adj[v]
        rest = g.full_mask & ~closed
        if rest == 0:
            continue
        if not any(_simplicial_in_mask(adj, rest, v) for v in bits(rest)):
            return False
    return True


def is_scm_bipartite(g: Graph) -> bool:
    """Sequentially Cohen-Macaulay test for bipartite graphs.

    Recursion: a bipartite graph qualifies iff it is edgeless or some vertex x
    of degree one with neighbor y has both G - N[x] and G - N[y] qualifying.
    """
    if bipartition(g) is None:
        raise NotBipartiteError("graph is not bipartite")
    adj = g.adj
    memo: dict[int, bool] = {}

    def rec(mask: int) -> bool:
        if mask in memo:
            return memo[mask]
        if _edgeless(adj, mask):
            memo[mask] = True
            return True
        result = False
        for x in bits(mask):
            nx = adj[x] & mask
            if nx.bit_count() != 1:
                continue
            y = nx.bit_length() - 1
            if rec(mask & ~_closed(adj, x)) and rec(mask & ~_closed(adj, y)):
                result = True
                break
        memo[mask] = result
        return result

    return rec(g.full_mask)


@dataclass
class BgFamilyReport:
    """Outcome of sweeping the bipartite subgraphs over all independent sets."""

    verdict: bool
    witness: frozenset[int] | None
    instances: int
    order_dependent: bool | None = None
    capped: bool = False


def bg_family_vd_report(
    g: Graph, exhaustive: bool = False, budget: int = 2000
) -> BgFamilyReport:
    """For every independent set A check that the bipartite subgraph built from
    a decomposition of G - N[A] is vertex decomposable.

    The deterministic decomposition decides the verdict.  With ``exhaustive``
    set, all decompositions (up to ``budget`` per remainder) are tried as well
    and disagreements between them are flagged in ``order_dependent``.
    """
    if not is_vertex_decomposable(g):
        raise NotVertexDecomposableError("graph is not vertex decomposable")
    order_dependent: bool | None = False if exhaustive else None
    capped = False
    checked = 0
    for a in independent_sets(g):
        h = delete_closed_neighborhood(g, a)
        checked += 1
        if h.n == 0:
            continue
        if not is_vertex_decomposable(h):
            return BgFamilyReport(False, a, checked, order_dependent, capped)
        verdict = is_vertex_decomposable(build_bg(shedding_decomposition(h)))
        if exhaustive:
            seen = 0
            for alt in enumerate_decompositions(h, limit=budget):
                seen += 1
                if is_vertex_decomposable(build_bg(alt)) != verdict:
                    order_dependent = True
            if seen == budget:
                capped = True
        if not verdict:
            return BgFamilyReport(False, a, checked, order_dependent, capped)
    return BgFamilyReport(True, None, checked, order_dependent, capped)


def bg_family_vd(g: Graph) -> bool:
    return bg_family_vd_report(g).verdict
