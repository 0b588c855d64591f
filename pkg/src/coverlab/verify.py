"""Verification suites.

Each suite sweeps a family of graphs and cross-checks a statement the rest of
the package relies on: symbolic powers against their layered-graph model,
Betti tables against polarization, componentwise linearity against vertex
decomposability of the associated bipartite subgraphs, and so on.  Suites
never raise on a mathematical mismatch; they collect failures into a report
so a batch run can finish and say exactly what broke where.

Graphs are enumerated up to isomorphism by extending each representative on
n-1 vertices with every possible neighbourhood of a new vertex, bucketing by
a cheap invariant and settling collisions with an exact isomorphism search.
Bipartite graphs on 8 vertices get a dedicated generator over the possible
part sizes, which is far cheaper than filtering the general census.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, fields
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .decomp import (
    bg_family_vd,
    build_bg,
    build_gk,
    is_vertex_decomposable,
    is_w_graph,
    layer_collapse_check,
    layer_collapse_check_bipartite,
    shedding_decomposition,
)
from .families import n_clique, random_tree, star_complete
from .graph_io import to_graph6
from .graphs import (
    Graph,
    add_whiskers,
    bits,
    delete_closed_neighborhood,
    delete_vertices,
    independent_sets,
    is_bipartite,
    is_connected,
    is_forest,
    standard_labels,
)
from .ideals import (
    cover_ideal,
    minimal_vertex_covers,
    polarize,
    power,
    symbolic_power_bruteforce,
    symbolic_power_via_gk,
)
from .resolution import (
    BudgetExceededError,
    betti_table,
    has_linear_quotients,
    has_linear_resolution,
    is_componentwise_linear,
    regularity,
)

SCHEMA_VERSION = 1


class UnknownSuiteError(ValueError):
    pass


# --- graph enumeration up to isomorphism ---------------------------------------


def _invariant_key(adj: tuple[int, ...], n: int) -> tuple:
    degs = [adj[v].bit_count() for v in range(n)]
    signature = tuple(
        sorted((degs[v], tuple(sorted(degs[u] for u in bits(adj[v])))) for v in range(n))
    )
    triangles = 0
    for v in range(n):
        for u in bits(adj[v]):
            if u > v:
                triangles += (adj[v] & adj[u]).bit_count()
    return (n, sum(degs) // 2, triangles // 3, signature)


def _isomorphic(a: tuple[int, ...], b: tuple[int, ...], n: int) -> bool:
    deg_a = [a[v].bit_count() for v in range(n)]
    deg_b = [b[v].bit_count() for v in range(n)]
    order = sorted(range(n), key=lambda v: -deg_a[v])
    image = [-1] * n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or deg_b[w] != deg_a[v]:
                continue
            if all((a[v] >> order[j] & 1) == (b[w] >> image[order[j]] & 1) for j in range(i)):
                image[v] = w
                used |= 1 << w
                if rec(i + 1):
                    return True
                used &= ~(1 << w)
        image[v] = -1
        return False

    return rec(0)


def _dedupe(candidates, n: int) -> list[tuple[int, ...]]:
    buckets: dict[tuple, list[tuple[int, ...]]] = {}
    out: list[tuple[int, ...]] = []
    for adj in candidates:
        bucket = buckets.setdefault(_invariant_key(adj, n), [])
        if not any(_isomorphic(adj, other, n) for other in bucket):
            bucket.append(adj)
            out.append(adj)
    return out


@lru_cache(maxsize=None)
def _graph_reps(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)

    def grow():
        new = n - 1
        for prev in _graph_reps(n - 1):
            for mask in range(1 << new):
                yield tuple(
                    row | ((mask >> v & 1) << new) for v, row in enumerate(prev)
                ) + (mask,)

    return tuple(_dedupe(grow(), n))


@lru_cache(maxsize=None)
def _bipartite_reps(n: int) -> tuple[tuple[int, ...], ...]:
    """Bipartite representatives generated over every split of the vertex set."""

    def grow():
        for a in range(0, n // 2 + 1):
            b = n - a
            for mask in range(1 << (a * b)):
                rows = [0] * n
                for i in range(a):
                    for j in range(b):
                        if mask >> (i * b + j) & 1:
                            rows[i] |= 1 << (a + j)
                            rows[a + j] |= 1 << i
                yield tuple(rows)

    return tuple(_dedupe(grow(), n))


def _sampled_graphs(
    n: int, connected: bool, bipartite: bool, samples: int, seed: int
) -> list[Graph]:
    import random

    rng = random.Random(seed)
    labels = standard_labels(n)
    out: list[Graph] = []
    attempts = 0
    while len(out) < samples:
        attempts += 1
        if attempts > 200 * samples:
            raise ValueError(f"sampling could not hit the filters after {attempts} tries")
        rows = [0] * n
        if bipartite:
            a = rng.randint(1, n - 1)
            for i in range(a):
                for j in range(a, n):
                    if rng.random() < 0.5:
                        rows[i] |= 1 << j
                        rows[j] |= 1 << i
        else:
            for i in range(n):
                for j in range(i + 1, n):
                    if rng.random() < 0.5:
                        rows[i] |= 1 << j
                        rows[j] |= 1 << i
        g = Graph(labels, tuple(rows))
        if connected and not is_connected(g):
            continue
        out.append(g)
    return out


def enumerate_graphs(
    n: int,
    connected: bool = False,
    bipartite: bool = False,
    samples: int = 100,
    seed: int = 0,
) -> list[Graph]:
    """All graphs on n labelled-x1..xn vertices, one per isomorphism class.

    Exhaustive enumeration covers n <= 8; past that the census would not fit
    a test run, so the stream degrades to `samples` seeded random graphs
    matching the requested filters (no deduplication).
    """
    if n > 8:
        return _sampled_graphs(n, connected, bipartite, samples, seed)
    if bipartite and n >= 8:
        reps = _bipartite_reps(n)
    else:
        reps = _graph_reps(n)
    labels = standard_labels(n)
    out = []
    for adj in reps:
        g = Graph(labels, adj)
        if connected and not is_connected(g):
            continue
        if bipartite and not is_bipartite(g):
            continue
        out.append(g)
    return out


# --- reports --------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteLimits:
    """Knobs shared by every suite; each suite documents how it reads them."""

    max_n: int = 5
    max_k: int = 3
    field: str = "f2"
    seed: int = 0
    budget: int | None = 200_000
    cap: int | None = 350
    samples: int = 50

    def as_config(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    instances_tested: int
    failures: tuple[dict, ...]
    skipped: tuple[dict, ...]
    elapsed: float
    config: dict

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, stable: bool = False) -> str:
        payload = {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "ok": self.ok,
            "instances_tested": self.instances_tested,
            "failures": list(self.failures),
            "skipped": list(self.skipped),
            "elapsed": 0.0 if stable else round(self.elapsed, 3),
            "config": self.config,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def summary_line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        extra = f", {len(self.skipped)} skipped" if self.skipped else ""
        return (
            f"{verdict} {self.suite}: {self.instances_tested} instances, "
            f"{len(self.failures)} failures{extra} ({self.elapsed:.1f}s)"
        )


def report_from_json(text: str) -> VerificationReport:
    payload = json.loads(text)
    if payload.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema: {payload.get('schema')!r}")
    return VerificationReport(
        suite=payload["suite"],
        instances_tested=payload["instances_tested"],
        failures=tuple(payload["failures"]),
        skipped=tuple(payload["skipped"]),
        elapsed=payload["elapsed"],
        config=payload["config"],
    )


# --- shared helpers -------------------------------------------------------------


def _desc(g: Graph, **extra) -> dict:
    d = {"graph6": to_graph6(g), "n": g.n}
    d.update(extra)
    return d


def _cl_or_none(ideal, limits: SuiteLimits) -> bool | None:
    """Componentwise linearity, or None when the work cap was hit."""
    try:
        return is_componentwise_linear(
            ideal,
            field=limits.field,
            lq_budget=limits.budget,
            max_trunc_gens=limits.cap,
        )
    except BudgetExceededError:
        return None


def _cl_symbolic(g: Graph, k: int, limits: SuiteLimits) -> bool | None:
    return _cl_or_none(symbolic_power_via_gk(g, k), limits)


def _label_sets(ideal) -> set[frozenset[str]]:
    return {
        frozenset(v for v, e in zip(ideal.variables, m) if e) for m in ideal.gens
    }


def _has_edge(g: Graph) -> bool:
    return g.edge_count() > 0


# --- the suites -----------------------------------------------------------------


def _suite_fakhari(limits: SuiteLimits):
    """Symbolic powers three ways: intersection of edge primes, covers of the
    layered graph, and polarization landing exactly on the layered cover ideal.

    Connected graphs with at least one edge, n <= max_n, k <= max_k.
    """
    instances = 0
    failures: list[dict] = []
    for n in range(2, limits.max_n + 1):
        for g in enumerate_graphs(n, connected=True):
            if not _has_edge(g):
                continue
            for k in range(1, limits.max_k + 1):
                instances += 1
                brute = symbolic_power_bruteforce(g, k)
                layered = symbolic_power_via_gk(g, k)
                if brute.gens != layered.gens:
                    failures.append(
                        _desc(g, k=k, detail="layered route disagrees with intersection")
                    )
                    continue
                polarized, _ = polarize(brute)
                gk_cover = cover_ideal(build_gk(g, k).graph)
                if _label_sets(polarized) != _label_sets(gk_cover):
                    failures.append(
                        _desc(g, k=k, detail="polarization misses the layered cover ideal")
                    )
    return instances, failures, []


def _suite_polar_betti(limits: SuiteLimits):
    """Betti tables and linear-quotient verdicts are invariant under polarization,
    over both supported coefficient fields.

    Connected graphs, n <= max_n, k <= max_k.
    """
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []
    for n in range(2, limits.max_n + 1):
        for g in enumerate_graphs(n, connected=True):
            if not _has_edge(g):
                continue
            for k in range(1, limits.max_k + 1):
                instances += 1
                ideal = symbolic_power_via_gk(g, k)
                polarized, _ = polarize(ideal)
                for fld in ("f2", "q"):
                    ours = betti_table(ideal, fld).entries
                    theirs = betti_table(polarized, fld).entries
                    if ours != theirs:
                        failures.append(
                            _desc(g, k=k, field=fld, detail="Betti table changed under polarization")
                        )
                lq = has_linear_quotients(ideal, limits.budget)
                lq_pol = has_linear_quotients(polarized, limits.budget)
                if "unknown" in (lq.status, lq_pol.status):
                    skipped.append(_desc(g, k=k, reason="linear-quotient search hit its budget"))
                elif lq.status != lq_pol.status:
                    failures.append(
                        _desc(g, k=k, detail="linear-quotient verdict changed under polarization")
                    )
    return instances, failures, skipped


def _suite_layer_collapse(limits: SuiteLimits):
    """Deleting the closed neighbourhood of the top layer steps the layered graph
    down by two; for bipartite graphs deleting one side's top layer steps down
    by one.  All graphs (connected or not), n <= max_n, k up to max_k.
    """
    instances = 0
    failures: list[dict] = []
    for n in range(1, limits.max_n + 1):
        for g in enumerate_graphs(n):
            for k in range(3, limits.max_k + 1):
                instances += 1
                if not layer_collapse_check(g, k):
                    failures.append(_desc(g, k=k, detail="two-step collapse failed"))
            if is_bipartite(g):
                for k in range(2, limits.max_k + 1):
                    instances += 1
                    if not layer_collapse_check_bipartite(g, k):
                        failures.append(
                            _desc(g, k=k, detail="one-sided collapse failed")
                        )
    return instances, failures, []


def _suite_not_cl_propagation(limits: SuiteLimits):
    """Once the second and third symbolic powers both fail componentwise
    linearity, the fourth must fail as well.  Connected graphs, n <= max_n.
    """
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []
    for n in range(2, limits.max_n + 1):
        for g in enumerate_graphs(n, connected=True):
            if not _has_edge(g):
                continue
            cl2 = _cl_symbolic(g, 2, limits)
            cl3 = _cl_symbolic(g, 3, limits)
            if cl2 is None or cl3 is None:
                skipped.append(_desc(g, reason="componentwise check hit its cap"))
                continue
            if cl2 or cl3:
                continue
            instances += 1
            cl4 = _cl_symbolic(g, 4, limits)
            if cl4 is None:
                skipped.append(_desc(g, reason="fourth power hit its cap"))
            elif cl4:
                failures.append(
                    _desc(g, detail="k=2,3 fail componentwise linearity but k=4 passes")
                )
    return instances, failures, skipped


def _suite_suff_cond(limits: SuiteLimits):
    """A vertex decomposable graph with some independent set A whose remainder
    is vertex decomposable while the remainder's bipartite subgraph is not
    forces every symbolic power from the second on to be non componentwise
    linear.  Connected graphs, n <= max_n, powers 2..max_k.
    """
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []
    for n in range(2, limits.max_n + 1):
        for g in enumerate_graphs(n, connected=True):
            if not _has_edge(g) or not is_vertex_decomposable(g):
                continue
            witness = None
            for a in independent_sets(g):
                h = delete_closed_neighborhood(g, a)
                if h.n == 0 or not is_vertex_decomposable(h):
                    continue
                if not is_vertex_decomposable(build_bg(shedding_decomposition(h))):
                    witness = a
                    break
            if witness is None:
                continue
            instances += 1
            for k in range(2, limits.max_k + 1):
                cl = _cl_symbolic(g, k, limits)
                if cl is None:
                    skipped.append(_desc(g, k=k, reason="componentwise check hit its cap"))
                elif cl:
                    failures.append(
                        _desc(
                            g,
                            k=k,
                            witness=sorted(g.labels[v] for v in witness),
                            detail="predicted non-linearity but the power is componentwise linear",
                        )
                    )
    return instances, failures, skipped


def _suite_w_main(limits: SuiteLimits):
    """On graphs where every neighbourhood-deletion leaves a simplicial vertex,
    componentwise linearity of all symbolic powers is equivalent to vertex
    decomposability of the whole family of derived bipartite subgraphs.
    Graphs with an edge, n <= max_n, powers 1..max_k.
    """
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []
    for n in range(2, limits.max_n + 1):
        for g in enumerate_graphs(n):
            if not _has_edge(g) or not is_w_graph(g):
                continue
            instances += 1
            if not is_vertex_decomposable(g):
                failures.append(_desc(g, detail="qualifying graph is not vertex decomposable"))
                continue
            lhs = bg_family_vd(g)
            verdicts: dict[int, bool | None] = {}
            for k in range(1, limits.max_k + 1):
                verdicts[k] = _cl_symbolic(g, k, limits)
            if None in verdicts.values():
                skipped.append(_desc(g, reason="componentwise check hit its cap"))
                continue
            if lhs:
                bad = [k for k, v in verdicts.items() if not v]
                if bad:
                    failures.append(
                        _desc(g, detail=f"family is decomposable but k={bad} fail linearity")
                    )
            else:
                bad = [k for k, v in verdicts.items() if k >= 2 and v]
                if bad:
                    failures.append(
                        _desc(g, detail=f"family is not decomposable but k={bad} pass linearity")
                    )
    return instances, failures, skipped


def _forest_hypothesis(whiskered: Graph) -> bool:
    """After removing any independent set's closed neighbourhood, the derived
    bipartite subgraph minus the surviving whiskered originals must be a forest."""
    bases = {lab[2:] for lab in whiskered.labels if lab.startswith("z_")}
    for a in independent_sets(whiskered):
        h = delete_closed_neighborhood(whiskered, a)
        if h.n == 0:
            continue
        if not is_vertex_decomposable(h):
            return False
        b = build_bg(shedding_decomposition(h))
        prune = [b.index(lab) for lab in h.labels if lab in bases]
        if not is_forest(delete_vertices(b, prune)):
            return False
    return True


def _suite_whisker(limits: SuiteLimits):
    """Whiskering enough vertices forces componentwise linear symbolic powers.

    Part one: whiskering all but at most three vertices of any connected graph
    (n <= max_n) gives componentwise linear powers 1..max_k.  Part two, run on
    the graphs with at most four base vertices: when a whiskered graph
    additionally satisfies the forest hypothesis on its derived bipartite
    subgraphs, powers from the second on are componentwise linear (the same
    verdicts are reused, so part two only cross-checks the implication).
    """
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []
    for n in range(1, limits.max_n + 1):
        for g in enumerate_graphs(n, connected=True):
            for size in range(max(0, n - 3), n + 1):
                for s in combinations(range(n), size):
                    w = add_whiskers(g, s)
                    if not _has_edge(w):
                        continue
                    instances += 1
                    where = {"s": sorted(g.labels[v] for v in s)}
                    verdicts: dict[int, bool | None] = {}
                    for k in range(1, limits.max_k + 1):
                        verdicts[k] = _cl_symbolic(w, k, limits)
                        if verdicts[k] is None:
                            skipped.append(
                                _desc(g, **where, k=k, reason="componentwise check hit its cap")
                            )
                        elif not verdicts[k]:
                            failures.append(
                                _desc(
                                    g,
                                    **where,
                                    k=k,
                                    detail="whiskered graph lost componentwise linearity",
                                )
                            )
                    if n <= 4 and size and is_w_graph(w) and _forest_hypothesis(w):
                        bad = [
                            k for k, v in verdicts.items() if k >= 2 and v is False
                        ]
                        if bad:
                            failures.append(
                                _desc(
                                    g,
                                    **where,
                                    detail=f"forest hypothesis holds but k={bad} fail linearity",
                                )
                            )
    return instances, failures, skipped


def _star_graphs(total: int):
    """Star graphs over a complete core: every way to attach independent outer
    vertices to nonempty core subsets, deduplicated up to isomorphism."""
    seen: dict[tuple, list[tuple[int, ...]]] = {}
    for n in range(1, total):
        subsets = [c for r in range(1, n + 1) for c in combinations(range(n), r)]
        for m in range(1, total - n + 1):
            for attach in combinations_with_replacement(subsets, m):
                g = star_complete(n, attach)
                key = _invariant_key(g.adj, g.n)
                bucket = seen.setdefault(key, [])
                if any(_isomorphic(g.adj, other, g.n) for other in bucket):
                    continue
                bucket.append(g.adj)
                yield n, attach, g


def _suite_star(limits: SuiteLimits):
    """Complete-core graphs with independent outer vertices: the derived
    bipartite subgraph is vertex decomposable exactly when the symbolic powers
    from the second on are componentwise linear.  Total vertices <= max_n.
    """
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []
    for n, attach, g in _star_graphs(limits.max_n):
        instances += 1
        where = {"core": n, "attach": [sorted(c) for c in attach]}
        if not is_w_graph(g):
            failures.append(_desc(g, **where, detail="chordal core graph failed the W test"))
            continue
        lhs = is_vertex_decomposable(build_bg(shedding_decomposition(g)))
        for k in range(2, limits.max_k + 1):
            cl = _cl_symbolic(g, k, limits)
            if cl is None:
                skipped.append(_desc(g, **where, k=k, reason="componentwise check hit its cap"))
            elif cl is not lhs:
                failures.append(
                    _desc(
                        g,
                        **where,
                        k=k,
                        detail="bipartite subgraph verdict disagrees with linearity",
                    )
                )
    return instances, failures, skipped


def _suite_nclique(limits: SuiteLimits):
    """Clique bundles glued along a common core: with a core of size one the
    powers from the second on are always componentwise linear; with a bigger
    core they are componentwise linear (all k >= 1) exactly when at most one
    branch has a single outer vertex.  Total vertices <= max_n.
    """
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []

    def branch_lists(budget, minimum):
        yield ()
        for m in range(minimum, budget + 1):
            for rest in branch_lists(budget - m, m):
                yield (m,) + rest

    configs = [
        (p, sizes)
        for p in range(1, limits.max_n)
        for sizes in branch_lists(limits.max_n - p, 1)
        if sizes
    ]
    for p, sizes in configs:
        g = n_clique(p, sizes)
        instances += 1
        where = {"core": p, "branches": list(sizes)}
        ks = range(1, limits.max_k + 1) if p > 1 else range(2, limits.max_k + 1)
        verdicts: dict[int, bool | None] = {k: _cl_symbolic(g, k, limits) for k in ks}
        if None in verdicts.values():
            skipped.append(_desc(g, **where, reason="componentwise check hit its cap"))
            continue
        if p == 1:
            expect = True
        else:
            expect = sum(1 for m in sizes if m == 1) <= 1
        if expect:
            bad = [k for k, v in verdicts.items() if not v]
        else:
            bad = [k for k, v in verdicts.items() if k >= 2 and v]
        if bad:
            failures.append(
                _desc(g, **where, detail=f"expected linearity {expect} but k={bad} disagree")
            )
    return instances, failures, skipped


def _suite_bipartite_main(limits: SuiteLimits):
    """Connected bipartite graphs: vertex decomposability is equivalent to the
    square of the cover ideal being componentwise linear.  n <= max_n.
    """
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []
    for n in range(2, limits.max_n + 1):
        for g in enumerate_graphs(n, connected=True, bipartite=True):
            if not _has_edge(g):
                continue
            instances += 1
            vd = is_vertex_decomposable(g)
            cl2 = _cl_or_none(power(cover_ideal(g), 2), limits)
            if cl2 is None:
                skipped.append(_desc(g, reason="componentwise check hit its cap"))
            elif cl2 is not vd:
                failures.append(
                    _desc(g, vd=vd, detail="decomposability and squared linearity disagree")
                )
    return instances, failures, skipped


def _suite_bipartite_linres(limits: SuiteLimits):
    """Connected bipartite graphs: the cover ideal has a linear resolution if
    and only if each of its powers does.  n <= max_n, powers up to max_k.
    """
    instances = 0
    failures: list[dict] = []
    for n in range(2, limits.max_n + 1):
        for g in enumerate_graphs(n, connected=True, bipartite=True):
            if not _has_edge(g):
                continue
            instances += 1
            j = cover_ideal(g)
            base = has_linear_resolution(j, limits.field)
            for k in range(2, limits.max_k + 1):
                got = has_linear_resolution(power(j, k), limits.field)
                if got is not base:
                    failures.append(
                        _desc(g, k=k, detail="linear resolution flipped between powers")
                    )
    return instances, failures, []


def _suite_reg_formula(limits: SuiteLimits):
    """Vertex decomposable connected bipartite graphs: the regularity of every
    power is that power times the largest minimal cover size.  n <= max_n,
    powers up to max_k.
    """
    instances = 0
    failures: list[dict] = []
    for n in range(2, limits.max_n + 1):
        for g in enumerate_graphs(n, connected=True, bipartite=True):
            if not _has_edge(g) or not is_vertex_decomposable(g):
                continue
            instances += 1
            d = max(len(c) for c in minimal_vertex_covers(g))
            j = cover_ideal(g)
            for k in range(1, limits.max_k + 1):
                got = regularity(power(j, k), limits.field)
                if got != k * d:
                    failures.append(
                        _desc(g, k=k, expected=k * d, got=got, detail="regularity off formula")
                    )
    return instances, failures, []


def _suite_tree(limits: SuiteLimits):
    """Random trees: every power of the cover ideal admits linear quotients."""
    instances = 0
    failures: list[dict] = []
    skipped: list[dict] = []
    for i in range(limits.samples):
        seed = limits.seed + i
        t = random_tree(2 + seed % 7, seed)
        for k in range(1, limits.max_k + 1):
            instances += 1
            lq = has_linear_quotients(power(cover_ideal(t), k), limits.budget)
            if lq.status == "unknown":
                skipped.append(_desc(t, seed=seed, k=k, reason="search hit its budget"))
            elif lq.status != "found":
                failures.append(_desc(t, seed=seed, k=k, detail="no linear quotient order"))
    return instances, failures, skipped


# --- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class _Suite:
    fn: object
    defaults: dict
    summary: str


SUITES: dict[str, _Suite] = {
    "fakhari": _Suite(
        _suite_fakhari,
        {"max_n": 5, "max_k": 3},
        "symbolic powers vs layered-graph covers vs polarization",
    ),
    "polar-betti": _Suite(
        _suite_polar_betti,
        {"max_n": 4, "max_k": 3},
        "Betti tables and quotient verdicts survive polarization",
    ),
    "layer-collapse": _Suite(
        _suite_layer_collapse,
        {"max_n": 6, "max_k": 4},
        "neighbourhood deletion steps layered graphs down",
    ),
    "not-cl-propagation": _Suite(
        _suite_not_cl_propagation,
        {"max_n": 5, "max_k": 4},
        "non-linearity at k=2,3 forces it at k=4",
    ),
    "suff-cond": _Suite(
        _suite_suff_cond,
        {"max_n": 5, "max_k": 3},
        "bad bipartite subgraph witnesses kill linearity",
    ),
    "w-main": _Suite(
        _suite_w_main,
        {"max_n": 5, "max_k": 3},
        "simplicial-rich graphs: linearity equals family decomposability",
    ),
    "whisker": _Suite(
        _suite_whisker,
        {"max_n": 4, "max_k": 2},
        "whiskering all but three vertices forces linearity",
    ),
    "star": _Suite(
        _suite_star,
        {"max_n": 5, "max_k": 2},
        "complete-core graphs: subgraph verdict equals linearity",
    ),
    "nclique": _Suite(
        _suite_nclique,
        {"max_n": 7, "max_k": 2},
        "clique bundles: branch sizes decide linearity",
    ),
    "bipartite-main": _Suite(
        _suite_bipartite_main,
        {"max_n": 7},
        "bipartite: decomposability equals squared linearity",
    ),
    "bipartite-linres": _Suite(
        _suite_bipartite_linres,
        {"max_n": 6, "max_k": 3},
        "bipartite: linear resolution is stable under powers",
    ),
    "reg-formula": _Suite(
        _suite_reg_formula,
        {"max_n": 6, "max_k": 3},
        "bipartite decomposable: regularity grows linearly",
    ),
    "tree": _Suite(
        _suite_tree,
        {"samples": 50, "max_k": 3},
        "random trees: powers keep linear quotients",
    ),
}


def suite_names() -> tuple[str, ...]:
    return tuple(SUITES)


def run_suite(name: str, **overrides) -> VerificationReport:
    """Run one suite by name; keyword overrides replace its default limits."""
    if name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; available: {', '.join(SUITES)}"
        )
    suite = SUITES[name]
    settings = dict(suite.defaults)
    for key, value in overrides.items():
        if value is not None:
            settings[key] = value
    limits = SuiteLimits(**settings)
    start = time.perf_counter()
    instances, failures, skipped = suite.fn(limits)
    elapsed = time.perf_counter() - start
    return VerificationReport(
        suite=name,
        instances_tested=instances,
        failures=tuple(failures),
        skipped=tuple(skipped),
        elapsed=elapsed,
        config=limits.as_config(),
    )
