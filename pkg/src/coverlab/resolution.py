"""Graded Betti numbers, regularity, linear quotients, componentwise linearity.

Betti numbers of a monomial ideal are computed multidegree by multidegree:
beta_{i,b} is the rank of reduced homology (in dimension i-1) of the simplicial
complex whose faces are the squarefree vectors tau <= supp(b) with x^(b-tau)
still in the ideal.  Only multidegrees in the lcm closure of the generators
can contribute, so the closure is enumerated and each strand handled on its
own.  Strands are cut down by a cone test and by elementary collapses before
any linear algebra runs; ranks are taken over F2 via bitmask elimination, and
over Q with exact fractions only where the F2 answer is nonzero (the F2
dimension bounds the rational one from above, so zero strands stay zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .ideals import (
    Monomial,
    MonomialIdeal,
    degree,
    divides,
    monomial_ideal,
    monomial_lcm,
    polarize,
    truncation,
)

FIELDS = ("f2", "q")


class ZeroIdealError(ValueError):
    pass


class TooManyGeneratorsError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    """A configured cap (lattice size, truncation size, search nodes) was hit."""


def _check_field(field: str) -> None:
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {field!r}")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- rank computations ----------------------------------------------------------


def _rank_f2(cols: Sequence[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in cols:
        while col:
            row = (col & -col).bit_length() - 1
            if row in pivots:
                col ^= pivots[row]
            else:
                pivots[row] = col
                rank += 1
                break
    return rank


def _rank_q(cols: Sequence[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for col in cols:
        vec = {r: Fraction(v) for r, v in col.items() if v}
        while vec:
            row = min(vec)
            if row in pivots:
                basis = pivots[row]
                scale = vec[row] / basis[row]
                for r, v in basis.items():
                    acc = vec.get(r, Fraction(0)) - scale * v
                    if acc:
                        vec[r] = acc
                    else:
                        vec.pop(r, None)
            else:
                pivots[row] = vec
                rank += 1
                break
    return rank


# --- simplicial homology ----------------------------------------------------------


def _has_cone_apex(faces: set[int], universe: int) -> bool:
    for v in _bits(universe):
        bit = 1 << v
        if all(tau | bit in faces for tau in faces if not tau & bit):
            return True
    return False


def _collapse(faces: set[int]) -> set[int]:
    """Remove free pairs until none are left; the homotopy type is preserved.

    A face is free when it has exactly one coface of one dimension higher
    (closure then rules out any larger coface as well).
    """
    faces = set(faces)
    universe = 0
    for tau in faces:
        universe |= tau
    count: dict[int, int] = {tau: 0 for tau in faces}
    for tau in faces:
        for v in _bits(tau):
            count[tau & ~(1 << v)] += 1
    stack = [sigma for sigma, c in count.items() if c == 1]
    while stack:
        sigma = stack.pop()
        if sigma not in faces or count[sigma] != 1:
            continue
        coface = None
        for v in _bits(universe & ~sigma):
            cand = sigma | 1 << v
            if cand in faces:
                coface = cand
                break
        if coface is None:
            continue
        faces.remove(sigma)
        faces.remove(coface)
        for gone in (sigma, coface):
            for v in _bits(gone):
                below = gone & ~(1 << v)
                if below in faces:
                    count[below] -= 1
                    if count[below] == 1:
                        stack.append(below)
    return faces


def _boundary_ranks(faces: set[int], field: str) -> dict[int, int]:
    """Reduced homology ranks of a (closed, nonempty) face set over the field."""
    by_size: dict[int, list[int]] = {}
    for tau in faces:
        by_size.setdefault(tau.bit_count(), []).append(tau)
    for group in by_size.values():
        group.sort()
    index: dict[int, int] = {}
    for group in by_size.values():
        for pos, tau in enumerate(group):
            index[tau] = pos
    ranks: dict[int, int] = {}
    sizes = sorted(by_size)
    for s in sizes:
        if s == 0:
            continue  # the empty face has zero boundary
        if s - 1 not in by_size:
            ranks[s] = 0
            continue
        if field == "f2":
            cols = []
            for tau in by_size[s]:
                col = 0
                for v in _bits(tau):
                    col |= 1 << index[tau & ~(1 << v)]
                cols.append(col)
            ranks[s] = _rank_f2(cols)
        else:
            cols = []
            for tau in by_size[s]:
                col: dict[int, int] = {}
                sign = 1
                for v in _bits(tau):  # ascending vertex order fixes the signs
                    col[index[tau & ~(1 << v)]] = sign
                    sign = -sign
                cols.append(col)
            ranks[s] = _rank_q(cols)
    out: dict[int, int] = {}
    for s in sizes:
        dim = s - 1
        f_count = len(by_size[s])
        h = f_count - ranks.get(s, 0) - ranks.get(s + 1, 0)
        if h:
            out[dim] = h
    return out


def _reduced_homology(faces: Iterable[int], field: str) -> dict[int, int]:
    faces = set(faces)
    if not faces:
        return {}
    universe = 0
    for tau in faces:
        universe |= tau
    if _has_cone_apex(faces, universe):
        return {}
    faces = _collapse(faces)
    if not faces:
        return {}
    dims2 = _boundary_ranks(faces, "f2")
    if field == "f2" or not dims2:
        return dims2  # over Q nothing survives where F2 already vanishes
    return _boundary_ranks(faces, "q")


@dataclass(frozen=True)
class SimplicialComplexChain:
    """A simplicial complex given by facets, with the coefficient field to use."""

    vertices: tuple[str, ...]
    facets: tuple[frozenset[int], ...]
    field: str = "f2"

    def __post_init__(self):
        _check_field(self.field)
        for f in self.facets:
            for v in f:
                if not 0 <= v < len(self.vertices):
                    raise ValueError(f"facet vertex {v} out of range")


def reduced_homology_dims(complex_: SimplicialComplexChain) -> dict[int, int]:
    """Nonzero reduced homology ranks by dimension.

    The void complex (no facets) has no homology at all; the complex whose
    only face is the empty set has a single class in dimension -1.
    """
    if not complex_.facets:
        return {}
    faces: set[int] = set()
    for f in complex_.facets:
        fmask = 0
        for v in f:
            fmask |= 1 << v
        sub = fmask
        while True:  # all subsets of the facet, empty set included
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fmask
    return _reduced_homology(faces, complex_.field)


# --- upper Koszul strands ----------------------------------------------------------


def _lcm_closure(gens: Sequence[Monomial], cap: int | None) -> list[Monomial]:
    points: set[Monomial] = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for b in frontier:
            for g in gens:
                c = monomial_lcm(b, g)
                if c not in points:
                    points.add(c)
                    fresh.append(c)
                    if cap is not None and len(points) > cap:
                        raise BudgetExceededError(
                            f"lcm closure exceeded the cap of {cap} points"
                        )
        frontier = fresh
    return sorted(points, key=lambda m: (sum(m), m))


def _koszul_faces(b: Monomial, gens: Sequence[Monomial]) -> set[int]:
    """Faces tau <= supp(b) with x^(b - tau) still divisible by a generator."""
    below = [g for g in gens if divides(g, b)]
    supp_mask = 0
    for i, e in enumerate(b):
        if e:
            supp_mask |= 1 << i
    squarefree = all(e <= 1 for e in b)
    if squarefree:
        gen_masks = []
        for g in below:
            gm = 0
            for i, e in enumerate(g):
                if e:
                    gm |= 1 << i
            gen_masks.append(gm)

        def member(tau: int) -> bool:
            return any(gm & tau == 0 for gm in gen_masks)

    else:

        def member(tau: int) -> bool:
            rest = tuple(e - (tau >> i & 1) for i, e in enumerate(b))
            return any(divides(g, rest) for g in below)

    faces = {0}
    frontier = [0]
    while frontier:
        fresh = []
        for tau in frontier:
            for v in _bits(supp_mask & ~tau):
                child = tau | 1 << v
                if child not in faces and member(child):
                    faces.add(child)
                    fresh.append(child)
        frontier = fresh
    return faces


# --- Betti tables ----------------------------------------------------------


@dataclass
class BettiTable:
    """Graded Betti numbers beta_{i,j} of a module, stored sparsely."""

    entries: dict[tuple[int, int], int]
    field: str = "f2"
    quotient: bool = False

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def total(self, i: int) -> int:
        return sum(v for (ii, j), v in self.entries.items() if ii == i)

    def to_text(self) -> str:
        """Grid in the usual layout: row d holds beta_{i, i+d}."""
        if not self.entries:
            return "(empty table)"
        imax = max(i for i, _ in self.entries)
        dmin = min(j - i for i, j in self.entries)
        dmax = max(j - i for i, j in self.entries)
        width = max(
            len(str(v)) for v in list(self.entries.values()) + [self.total(i) for i in range(imax + 1)]
        )
        width = max(width, len(str(imax)))
        header = "       " + " ".join(f"{i:>{width}}" for i in range(imax + 1))
        lines = [header]
        totals = " ".join(f"{self.total(i):>{width}}" for i in range(imax + 1))
        lines.append(f"total: {totals}")
        for d in range(dmin, dmax + 1):
            row = []
            for i in range(imax + 1):
                v = self.get(i, i + d)
                row.append(f"{v:>{width}}" if v else " " * (width - 1) + ".")
            lines.append(f"{d:>5}: " + " ".join(row))
        return "\n".join(lines)

    def to_json(self) -> str:
        import json

        payload = {
            "field": self.field,
            "quotient": self.quotient,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
        }
        return json.dumps(payload, sort_keys=True)


def betti_table(
    ideal: MonomialIdeal,
    field: str = "f2",
    quotient: bool = False,
    max_lattice: int | None = None,
) -> BettiTable:
    """Graded Betti numbers of the ideal (or of the quotient ring when asked).

    The quotient view is the usual shift: beta_{0,0} = 1 and
    beta_{i,j}(R/I) = beta_{i-1,j}(I) for i >= 1.
    """
    _check_field(field)
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no minimal free resolution here")
    entries: dict[tuple[int, int], int] = {}
    for b in _lcm_closure(ideal.gens, max_lattice):
        dims = _reduced_homology(_koszul_faces(b, ideal.gens), field)
        for d, r in dims.items():
            key = (d + 1, degree(b))
            entries[key] = entries.get(key, 0) + r
    if quotient:
        shifted = {(0, 0): 1}
        for (i, j), v in entries.items():
            shifted[(i + 1, j)] = v
        entries = shifted
    return BettiTable(entries, field, quotient)


def betti_table_taylor(
    ideal: MonomialIdeal, field: str = "f2", limit: int = 12
) -> BettiTable:
    """Independent cross-check: homology of multidegree strands of the Taylor complex.

    Exponential in the number of generators, hence the hard limit; useful as
    an oracle against the main computation on small inputs.
    """
    _check_field(field)
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no minimal free resolution here")
    m = len(ideal.gens)
    if m > limit:
        raise TooManyGeneratorsError(f"{m} generators exceed the Taylor limit {limit}")
    lcms: list[Monomial] = [None] * (1 << m)  # type: ignore[list-item]
    zero = tuple(0 for _ in ideal.variables)
    lcms[0] = zero
    strands: dict[Monomial, list[int]] = {}
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        lcms[mask] = monomial_lcm(lcms[mask & (mask - 1)], ideal.gens[low])
        strands.setdefault(lcms[mask], []).append(mask)
    entries: dict[tuple[int, int], int] = {}
    for b, masks in strands.items():
        by_size: dict[int, list[int]] = {}
        for mask in masks:
            by_size.setdefault(mask.bit_count(), []).append(mask)
        for group in by_size.values():
            group.sort()
        index = {
            mask: pos for group in by_size.values() for pos, mask in enumerate(group)
        }
        ranks: dict[int, int] = {}
        for s, group in sorted(by_size.items()):
            if s - 1 not in by_size:
                ranks[s] = 0
                continue
            cols: list[dict[int, int]] = []
            for mask in group:
                col: dict[int, int] = {}
                sign = 1
                for j in _bits(mask):
                    sub = mask & ~(1 << j)
                    if lcms[sub] == b:
                        col[index[sub]] = sign
                    sign = -sign
                cols.append(col)
            if field == "f2":
                ranks[s] = _rank_f2(
                    [sum(1 << r for r in col) for col in cols]
                )
            else:
                ranks[s] = _rank_q(cols)
        for s, group in by_size.items():
            h = len(group) - ranks.get(s, 0) - ranks.get(s + 1, 0)
            if h and s >= 1:
                key = (s - 1, degree(b))
                entries[key] = entries.get(key, 0) + h
    return BettiTable(entries, field)


def regularity(ideal: MonomialIdeal, field: str = "f2", max_lattice: int | None = None) -> int:
    return betti_table(ideal, field, max_lattice=max_lattice).regularity()


def has_linear_resolution(
    ideal: MonomialIdeal, field: str = "f2", max_lattice: int | None = None
) -> bool:
    """Equigenerated with all Betti numbers on the single linear strand."""
    _check_field(field)
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no resolution to inspect")
    d = ideal.min_degree()
    if ideal.max_degree() != d:
        return False
    for b in _lcm_closure(ideal.gens, max_lattice):
        allowed = degree(b) - d - 1
        dims = _reduced_homology(_koszul_faces(b, ideal.gens), field)
        if any(t != allowed for t in dims):
            return False
    return True


# --- linear quotients ----------------------------------------------------------


@dataclass
class LinearQuotients:
    """Search outcome: found (with a witness order), none (exhausted), or unknown."""

    status: str
    order: tuple[int, ...] | None
    nodes: int

    def __bool__(self) -> bool:
        return self.status == "found"


def _quotient_tables(gens: Sequence[Monomial]):
    m = len(gens)
    supp = [[0] * m for _ in range(m)]
    single = [[0] * m for _ in range(m)]
    for w in range(m):
        for u in range(m):
            if w == u:
                continue
            mask = 0
            deg = 0
            last = -1
            for i, (a, bb) in enumerate(zip(gens[w], gens[u])):
                if a > bb:
                    mask |= 1 << i
                    deg += a - bb
                    last = i
            supp[w][u] = mask
            if deg == 1:
                single[w][u] = 1 << last
    return supp, single


def has_linear_quotients(
    ideal: MonomialIdeal, budget: int | None = 200_000
) -> LinearQuotients:
    """Search for an order where every colon ideal is variable-generated.

    Adding generator u after the set P works iff for every w in P some w' in P
    has quotient w'/gcd(w',u) equal to a single variable that also divides
    w/gcd(w,u); the test depends on P only as a set, so failed sets are
    memoized.  A greedy incremental pass handles the common case; full
    backtracking (budgeted) settles the rest.
    """
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no generators to order")
    gens = ideal.gens
    m = len(gens)
    if m == 1:
        return LinearQuotients("found", (0,), 0)
    supp, single = _quotient_tables(gens)

    # greedy pass with incremental bookkeeping: singles[u] collects the
    # variables realized as one-variable quotients against u so far, and
    # bad[u] lists chosen generators whose quotient against u misses them all
    singles = [0] * m
    bad: list[list[int]] = [[] for _ in range(m)]
    remaining = list(range(m))
    chosen: list[int] = []
    nodes = 0
    while remaining:
        pick = next((u for u in remaining if not bad[u]), None)
        if pick is None:
            break
        chosen.append(pick)
        remaining.remove(pick)
        for u in remaining:
            nb = single[pick][u]
            if nb and not singles[u] & nb:
                singles[u] |= nb
                if bad[u]:
                    bad[u] = [w for w in bad[u] if not supp[w][u] & singles[u]]
            if not supp[pick][u] & singles[u]:
                bad[u].append(pick)
    if not remaining:
        return LinearQuotients("found", tuple(chosen), nodes)

    # backtracking over all insertion orders, memoizing dead prefix sets
    dead: set[int] = set()
    order: list[int] = []

    class _Out(Exception):
        pass

    def addable(u: int, members: list[int]) -> bool:
        acc = 0
        for w in members:
            acc |= single[w][u]
        return all(supp[w][u] & acc for w in members)

    def dfs(mask: int, members: list[int]) -> bool:
        nonlocal nodes
        if len(members) == m:
            return True
        if mask in dead:
            return False
        for u in range(m):
            if mask >> u & 1:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise _Out
            if addable(u, members):
                members.append(u)
                if dfs(mask | 1 << u, members):
                    return True
                members.pop()
        dead.add(mask)
        return False

    try:
        if dfs(0, order):
            return LinearQuotients("found", tuple(order), nodes)
        return LinearQuotients("none", None, nodes)
    except _Out:
        return LinearQuotients("unknown", None, nodes)


# --- componentwise linearity ----------------------------------------------------------


def is_componentwise_linear(
    ideal: MonomialIdeal,
    field: str = "f2",
    lq_budget: int | None = 200_000,
    max_lattice: int | None = None,
    max_trunc_gens: int | None = None,
    lq_fast_path: bool = True,
) -> bool:
    """Every degree truncation has a linear resolution.

    Strategy: the cheap lowest-degree truncation goes first (it kills most
    negatives), a found linear-quotient order settles positives, and only
    then are the remaining truncations resolved degree by degree.  Pass
    ``lq_fast_path=False`` to force the homological route throughout.
    """
    _check_field(field)
    if ideal.is_zero:
        raise ZeroIdealError("componentwise linearity of the zero ideal is undefined")
    lo = ideal.min_degree()
    hi = ideal.max_degree()
    base = monomial_ideal(
        ideal.variables, (m for m in ideal.gens if degree(m) == lo)
    )
    if not has_linear_resolution(base, field, max_lattice):
        return False
    if lo == hi:
        return True
    if lq_fast_path and has_linear_quotients(ideal, lq_budget):
        return True
    for d in range(lo + 1, hi + 1):
        trunc = truncation(ideal, d)
        if max_trunc_gens is not None and len(trunc.gens) > max_trunc_gens:
            raise BudgetExceededError(
                f"truncation at degree {d} has {len(trunc.gens)} generators"
            )
        if not has_linear_resolution(trunc, field, max_lattice):
            return False
    return True


def polarization_betti_check(ideal: MonomialIdeal, field: str = "f2") -> bool:
    """Betti table and linear-quotient verdict must survive polarization."""
    if ideal.is_zero:
        raise ZeroIdealError("nothing to compare for the zero ideal")
    polarized, _ = polarize(ideal)
    if betti_table(ideal, field).entries != betti_table(polarized, field).entries:
        return False
    ours = has_linear_quotients(ideal, budget=None)
    theirs = has_linear_quotients(polarized, budget=None)
    return ours.status == theirs.status
