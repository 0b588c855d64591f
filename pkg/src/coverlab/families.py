"""Parameterized graph families used throughout the experiments."""

from __future__ import annotations

import random
from typing import Sequence

from .graphs import Graph, GraphError, graph, standard_labels


class MalformedFamilySpecError(GraphError):
    pass


def path(n: int) -> Graph:
    if n < 1:
        raise MalformedFamilySpecError("path needs at least one vertex")
    return graph(standard_labels(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise MalformedFamilySpecError("cycle needs at least three vertices")
    return graph(standard_labels(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise MalformedFamilySpecError("complete graph needs at least one vertex")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return graph(standard_labels(n), edges)


def star_complete(n: int, attach: Sequence[Sequence[int]]) -> Graph:
    """A complete core x1..xn plus independent vertices y1.. attached to it.

    ``attach[j]`` lists the 0-based core indices adjacent to y{j+1}; each
    added vertex must touch the core, and added vertices are pairwise
    non-adjacent.
    """
    if n < 1:
        raise MalformedFamilySpecError("core must have at least one vertex")
    labels = list(standard_labels(n)) + [f"y{j + 1}" for j in range(len(attach))]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for j, targets in enumerate(attach):
        targets = sorted(set(targets))
        if not targets:
            raise MalformedFamilySpecError(f"y{j + 1} attaches to nothing")
        for t in targets:
            if not 0 <= t < n:
                raise MalformedFamilySpecError(f"y{j + 1} attaches outside the core")
            edges.append((t, n + j))
    return graph(labels, edges)


def n_clique(p: int, branch_sizes: Sequence[int]) -> Graph:
    """Cliques K_{p+m_i} glued along a common complete graph on x1..xp.

    Branch i contributes vertices y{i}_1..y{i}_{m_i}; two vertices are
    adjacent exactly when they sit in a common branch or both lie in the core.
    """
    if p < 1:
        raise MalformedFamilySpecError("common clique must have at least one vertex")
    if not branch_sizes or any(m < 1 for m in branch_sizes):
        raise MalformedFamilySpecError("every branch needs at least one vertex")
    labels = list(standard_labels(p))
    groups = []
    for i, m in enumerate(branch_sizes):
        ids = []
        for j in range(m):
            ids.append(len(labels))
            labels.append(f"y{i + 1}_{j + 1}")
        groups.append(ids)
    edges = [(a, b) for a in range(p) for b in range(a + 1, p)]
    for ids in groups:
        members = list(range(p)) + ids
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if members[a] < p and members[b] < p:
                    continue  # core pairs already added
                edges.append((members[a], members[b]))
    return graph(labels, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Random labelled tree: vertex i > 0 attaches to a uniform earlier vertex."""
    if n < 1:
        raise MalformedFamilySpecError("tree needs at least one vertex")
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return graph(standard_labels(n), edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    if n < 1:
        raise MalformedFamilySpecError("graph needs at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise MalformedFamilySpecError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return graph(standard_labels(n), edges)


def make_family(name: str, params: Sequence, seed: int = 0) -> Graph:
    """Dispatch a family by name; raises MalformedFamilySpecError on bad input."""
    try:
        if name == "path":
            (n,) = params
            return path(int(n))
        if name == "cycle":
            (n,) = params
            return cycle(int(n))
        if name == "complete":
            (n,) = params
            return complete(int(n))
        if name == "star-complete":
            n = int(params[0])
            attach = [
                [int(t) - 1 for t in str(spec).split(",") if t != ""]
                for spec in params[1:]
            ]
            return star_complete(n, attach)
        if name == "n-clique":
            p = int(params[0])
            sizes = [int(m) for m in params[1:]]
            return n_clique(p, sizes)
        if name == "random-tree":
            (n,) = params
            return random_tree(int(n), seed)
        if name == "random-graph":
            n, prob = params
            return random_graph(int(n), float(prob), seed)
    except MalformedFamilySpecError:
        raise
    except (ValueError, TypeError, IndexError) as exc:
        raise MalformedFamilySpecError(f"bad parameters for family {name!r}: {exc}") from exc
    raise MalformedFamilySpecError(f"unknown family {name!r}")
