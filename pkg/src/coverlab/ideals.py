"""Squarefree-flavored monomial ideal arithmetic.

Monomials are dense exponent tuples aligned with an ambient variable list;
ideals always store their unique minimal generating set, sorted by degree and
then lexicographically, so equality of the dataclasses is equality of ideals.
"""

from __future__ import annotations

import json
import re
from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .decomp import build_gk
from .graphs import Graph, bits, maximal_independent_sets

Monomial = tuple[int, ...]


class AmbientMismatchError(ValueError):
    pass


class NonSquarefreeError(ValueError):
    pass


class EdgelessGraphError(ValueError):
    pass


class InvalidPowerError(ValueError):
    pass


class IdealParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    kept_degs: list[int] = []
    for m in uniq:
        dm = sum(m)
        # only strictly smaller degrees can divide a distinct monomial
        limit = bisect_left(kept_degs, dm)
        if not any(divides(kept[t], m) for t in range(limit)):
            kept.append(m)
            kept_degs.append(dm)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    variables: tuple[str, ...]
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        nv = len(self.variables)
        if len(set(self.variables)) != nv:
            raise ValueError("ambient variables must be distinct")
        for m in self.gens:
            if len(m) != nv:
                raise ValueError("generator length disagrees with the ambient ring")
            if any(e < 0 for e in m):
                raise ValueError("negative exponent")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def degrees(self) -> list[int]:
        return [degree(m) for m in self.gens]

    def min_degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero ideal has no generator degrees")
        return degree(self.gens[0])

    def max_degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero ideal has no generator degrees")
        return degree(self.gens[-1])

    def is_squarefree(self) -> bool:
        return all(e <= 1 for m in self.gens for e in m)


def monomial_ideal(variables: Iterable[str], gens: Iterable[Monomial]) -> MonomialIdeal:
    """Canonical constructor: dedupe, drop non-minimal generators, sort."""
    variables = tuple(variables)
    return MonomialIdeal(variables, _minimalize(tuple(m) for m in gens))


def contains_monomial(ideal: MonomialIdeal, m: Monomial) -> bool:
    return any(divides(g, m) for g in ideal.gens)


# --- graph ideals ---------------------------------------------------------------


def minimal_vertex_covers(g: Graph) -> list[frozenset[int]]:
    """Complements of the maximal independent sets, ordered by (size, members)."""
    full = frozenset(g.vertices())
    covers = [full - s for s in maximal_independent_sets(g)]
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def cover_ideal(g: Graph) -> MonomialIdeal:
    """Ideal generated by the products over minimal vertex covers."""
    if g.edge_count() == 0:
        raise EdgelessGraphError("an edgeless graph has the empty cover only")
    gens = []
    for cov in minimal_vertex_covers(g):
        gens.append(tuple(1 if v in cov else 0 for v in g.vertices()))
    return monomial_ideal(g.labels, gens)


def edge_ideal(g: Graph) -> MonomialIdeal:
    gens = []
    for u, v in g.edges():
        m = [0] * g.n
        m[u] = m[v] = 1
        gens.append(tuple(m))
    return monomial_ideal(g.labels, gens)


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & m == k for k in out):
            out.append(m)
    return out


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Squarefree dual: generators become the minimal transversals of supports."""
    if not ideal.is_squarefree():
        raise NonSquarefreeError("alexander dual requires a squarefree ideal")
    nv = len(ideal.variables)
    supports = []
    for m in ideal.gens:
        supports.append(sum(1 << i for i in range(nv) if m[i]))
    sols = [0]
    for edge in supports:
        grown = []
        for s in sols:
            if s & edge:
                grown.append(s)
            else:
                grown.extend(s | 1 << v for v in bits(edge))
        sols = _minimal_masks(grown)
    gens = [tuple(1 if s >> i & 1 else 0 for i in range(nv)) for s in sols]
    return monomial_ideal(ideal.variables, gens)


# --- products, intersections, symbolic powers -----------------------------------


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise InvalidPowerError(f"exponent must be at least 1, got {k}")
    products = set()
    for combo in combinations_with_replacement(ideal.gens, k):
        m = combo[0]
        for other in combo[1:]:
            m = monomial_mul(m, other)
        products.add(m)
    return monomial_ideal(ideal.variables, products)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.variables != b.variables:
        raise AmbientMismatchError("ideals live in different ambient rings")
    return monomial_ideal(a.variables, (monomial_lcm(u, w) for u in a.gens for w in b.gens))


def symbolic_power_bruteforce(g: Graph, k: int) -> MonomialIdeal:
    """Intersection of the k-th powers of the edge primes, folded pairwise."""
    if k < 1:
        raise InvalidPowerError(f"exponent must be at least 1, got {k}")
    if g.edge_count() == 0:
        raise EdgelessGraphError("no edge primes to intersect")
    pieces = []
    for i, j in sorted(g.edges()):
        gens = []
        for a in range(k + 1):
            m = [0] * g.n
            m[i] = a
            m[j] = k - a
            gens.append(tuple(m))
        pieces.append(monomial_ideal(g.labels, gens))
    while len(pieces) > 1:
        folded = [
            intersect(pieces[t], pieces[t + 1]) for t in range(0, len(pieces) - 1, 2)
        ]
        if len(pieces) % 2:
            folded.append(pieces[-1])
        pieces = folded
    return pieces[0]


def symbolic_power_via_gk(g: Graph, k: int) -> MonomialIdeal:
    """Symbolic power read off the layered graph: cover layers collapse to exponents."""
    if k < 1:
        raise InvalidPowerError(f"exponent must be at least 1, got {k}")
    if g.edge_count() == 0:
        raise EdgelessGraphError("no edges, so no layered covers")
    lay = build_gk(g, k)
    gens = []
    for cov in minimal_vertex_covers(lay.graph):
        m = [0] * g.n
        for idx in cov:
            i, _ = lay.base_of(idx)
            m[i] += 1
        gens.append(tuple(m))
    return monomial_ideal(g.labels, gens)


# --- polarization ----------------------------------------------------------------


@dataclass(frozen=True)
class PolarizationMap:
    """Bookkeeping between an ambient ring and its polarized counterpart.

    Source variable j spreads over layers 1..layers[j]; polar variables are
    ordered source-major, layer-minor and named ``<var>_<layer>``.
    """

    source_variables: tuple[str, ...]
    layers: tuple[int, ...]

    @property
    def offsets(self) -> tuple[int, ...]:
        out = []
        acc = 0
        for width in self.layers:
            out.append(acc)
            acc += width
        return tuple(out)

    @property
    def polar_variables(self) -> tuple[str, ...]:
        out = []
        for var, width in zip(self.source_variables, self.layers):
            out.extend(f"{var}_{p}" for p in range(1, width + 1))
        return tuple(out)

    def polar_index(self, j: int, p: int) -> int:
        if not 1 <= p <= self.layers[j]:
            raise ValueError(f"layer {p} out of range for variable {j}")
        return self.offsets[j] + p - 1

    def source_of(self, idx: int) -> tuple[int, int]:
        offsets = self.offsets
        j = bisect_left(offsets, idx + 1) - 1
        return j, idx - offsets[j] + 1


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """Replace x^e by a product of e distinct layer variables, generator by generator."""
    nv = len(ideal.variables)
    layers = tuple(
        max((m[j] for m in ideal.gens), default=0) for j in range(nv)
    )
    pmap = PolarizationMap(ideal.variables, layers)
    offsets = pmap.offsets
    width = sum(layers)
    gens = []
    for m in ideal.gens:
        vec = [0] * width
        for j in range(nv):
            for p in range(m[j]):
                vec[offsets[j] + p] = 1
        gens.append(tuple(vec))
    return monomial_ideal(pmap.polar_variables, gens), pmap


def depolarize(polar: MonomialIdeal, pmap: PolarizationMap) -> MonomialIdeal:
    """Inverse direction: exponent of source variable j = number of occupied layers."""
    if not polar.is_squarefree():
        raise NonSquarefreeError("can only depolarize squarefree monomials")
    if polar.variables != pmap.polar_variables:
        raise AmbientMismatchError("ideal does not live in the polarized ring of this map")
    nv = len(pmap.source_variables)
    gens = []
    for m in polar.gens:
        vec = [0] * nv
        for idx, e in enumerate(m):
            if e:
                j, _ = pmap.source_of(idx)
                vec[j] += 1
        gens.append(tuple(vec))
    return monomial_ideal(pmap.source_variables, gens)


# --- degree truncation ------------------------------------------------------------


def _monomials_of_degree(nvars: int, total: int) -> Iterator[Monomial]:
    if nvars == 0:
        if total == 0:
            yield ()
        return
    if nvars == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _monomials_of_degree(nvars - 1, total - head):
            yield (head,) + tail


def truncation(ideal: MonomialIdeal, d: int) -> MonomialIdeal:
    """The ideal generated by every degree-d element of the input."""
    nv = len(ideal.variables)
    gens = set()
    for m in ideal.gens:
        gap = d - degree(m)
        if gap < 0:
            continue
        for extra in _monomials_of_degree(nv, gap):
            gens.add(monomial_mul(m, extra))
    return monomial_ideal(ideal.variables, gens)


# --- text and json formats ---------------------------------------------------------


def _natural_key(label: str):
    return tuple(
        int(chunk) if chunk.isdigit() else chunk
        for chunk in re.split(r"(\d+)", label)
        if chunk != ""
    )


def monomial_to_text(m: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for var, e in zip(variables, m):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts) if parts else "1"


def ideal_to_text(ideal: MonomialIdeal) -> str:
    if ideal.is_zero:
        return "0\n"
    lines = [monomial_to_text(m, ideal.variables) for m in ideal.gens]
    return "\n".join(lines) + "\n"


def ideal_from_text(text: str, variables: Sequence[str] | None = None) -> MonomialIdeal:
    """Parse one generator per line, e.g. ``x1^2*x3``.

    Unknown ambient: variables are collected from the generators and ordered
    naturally (x2 before x10).  ``0`` on its own denotes the zero ideal and
    ``1`` the unit generator.
    """
    raw: list[tuple[int, list[tuple[str, int]]]] = []
    names: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body == "0":
            raw.append((lineno, None))
            continue
        if body == "1":
            raw.append((lineno, []))
            continue
        factors = []
        for tok in body.split("*"):
            tok = tok.strip()
            if not tok:
                raise IdealParseError("empty factor", lineno)
            if "^" in tok:
                name, _, exp = tok.partition("^")
                if not exp.lstrip("-").isdigit():
                    raise IdealParseError(f"bad exponent in {tok!r}", lineno)
                e = int(exp)
                if e < 0:
                    raise IdealParseError("negative exponent", lineno)
            else:
                name, e = tok, 1
            name = name.strip()
            if not name:
                raise IdealParseError(f"missing variable name in {tok!r}", lineno)
            factors.append((name, e))
            names.add(name)
        raw.append((lineno, factors))
    if variables is None:
        variables = tuple(sorted(names, key=_natural_key))
    else:
        variables = tuple(variables)
    lookup = {v: i for i, v in enumerate(variables)}
    gens = []
    zero_marker = False
    for lineno, factors in raw:
        if factors is None:
            zero_marker = True
            continue
        vec = [0] * len(variables)
        for name, e in factors:
            if name not in lookup:
                raise IdealParseError(f"variable {name!r} not in the ambient ring", lineno)
            vec[lookup[name]] += e
        gens.append(tuple(vec))
    if zero_marker and gens:
        raise IdealParseError("'0' must stand alone", 1)
    return monomial_ideal(variables, gens)


def ideal_to_json(ideal: MonomialIdeal) -> str:
    payload = {
        "ambient": list(ideal.variables),
        "gens": [list(m) for m in ideal.gens],
    }
    return json.dumps(payload, sort_keys=True)


def ideal_from_json(blob: str) -> MonomialIdeal:
    payload = json.loads(blob)
    return monomial_ideal(payload["ambient"], (tuple(g) for g in payload["gens"]))
