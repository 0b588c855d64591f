from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverlab import (
    MonomialIdeal,
    alexander_dual,
    contains_monomial,
    cover_ideal,
    depolarize,
    edge_ideal,
    graph,
    ideal_from_json,
    ideal_from_text,
    ideal_to_json,
    ideal_to_text,
    intersect,
    minimal_vertex_covers,
    monomial_ideal,
    polarize,
    power,
    standard_labels,
    symbolic_power_bruteforce,
    symbolic_power_via_gk,
    truncation,
)
from coverlab.decomp import build_gk
from coverlab.families import cycle, path, random_graph
from coverlab.ideals import (
    AmbientMismatchError,
    EdgelessGraphError,
    IdealParseError,
    InvalidPowerError,
    NonSquarefreeError,
    degree,
    divides,
    monomial_to_text,
)
from coverlab.verify import enumerate_graphs


@st.composite
def ideals_st(draw, max_vars=4, max_exp=3, squarefree=False):
    nv = draw(st.integers(min_value=1, max_value=max_vars))
    top = 1 if squarefree else max_exp
    gen = st.tuples(*[st.integers(0, top) for _ in range(nv)])
    gens = draw(st.lists(gen.filter(lambda m: any(m)), min_size=1, max_size=6))
    return monomial_ideal(standard_labels(nv), gens)


# --- minimal generators -------------------------------------------------------------


def test_minimalization_drops_multiples():
    i = monomial_ideal(("x", "y"), [(1, 0), (2, 0), (1, 1)])
    assert i.gens == ((1, 0),)


def test_gens_sorted_by_degree_then_exponents():
    i = monomial_ideal(("x", "y", "z"), [(0, 0, 2), (1, 1, 0), (2, 0, 0)])
    assert [degree(m) for m in i.gens] == [2, 2, 2]
    assert i.gens == ((0, 0, 2), (1, 1, 0), (2, 0, 0))


@given(ideals_st())
def test_no_generator_divides_another(i):
    for a, b in combinations(i.gens, 2):
        assert not divides(a, b) and not divides(b, a)


def test_contains_monomial():
    i = monomial_ideal(("x", "y"), [(2, 0), (1, 1)])
    assert contains_monomial(i, (2, 5))
    assert contains_monomial(i, (1, 1))
    assert not contains_monomial(i, (1, 0))
    assert not contains_monomial(i, (0, 9))


# --- covers and graph ideals --------------------------------------------------------


def _covers_oracle(g):
    out = []
    edges = list(g.edges())
    for r in range(g.n + 1):
        for s in combinations(g.vertices(), r):
            chosen = set(s)
            if not all(u in chosen or v in chosen for u, v in edges):
                continue
            if any(
                all(u in chosen - {x} or v in chosen - {x} for u, v in edges)
                for x in chosen
            ):
                continue
            out.append(frozenset(chosen))
    return sorted(out, key=lambda c: (len(c), sorted(c)))


@pytest.mark.parametrize("n", range(1, 6))
def test_minimal_covers_match_bruteforce(n):
    for g in enumerate_graphs(n):
        assert minimal_vertex_covers(g) == _covers_oracle(g)


def test_cover_ideal_p4():
    j = cover_ideal(path(4))
    assert len(j.gens) == 3
    assert ideal_to_text(j) == "x2*x4\nx2*x3\nx1*x3\n"


def test_cover_ideal_rejects_edgeless():
    with pytest.raises(EdgelessGraphError):
        cover_ideal(graph(["a", "b"], []))


def test_edge_ideal_and_duality():
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            if g.edge_count() == 0:
                assert edge_ideal(g).is_zero
                continue
            assert cover_ideal(g).gens == alexander_dual(edge_ideal(g)).gens


@given(ideals_st(squarefree=True))
def test_alexander_dual_is_involutive(i):
    assert alexander_dual(alexander_dual(i)).gens == i.gens


def test_alexander_dual_conventions():
    unit = monomial_ideal(("x", "y"), [(0, 0)])
    zero = monomial_ideal(("x", "y"), [])
    assert alexander_dual(unit).is_zero
    assert alexander_dual(zero).gens == ((0, 0),)
    with pytest.raises(NonSquarefreeError):
        alexander_dual(monomial_ideal(("x",), [(2,)]))


# --- powers, intersections, symbolic powers -----------------------------------------


def test_power_basics():
    j = cover_ideal(cycle(4))
    assert power(j, 1).gens == j.gens
    sq = power(j, 2)
    assert all(degree(m) == 4 for m in sq.gens)
    with pytest.raises(InvalidPowerError):
        power(j, 0)


def test_intersect_definitional():
    a = monomial_ideal(("x", "y"), [(2, 0)])
    b = monomial_ideal(("x", "y"), [(1, 1)])
    assert intersect(a, b).gens == ((2, 1),)
    with pytest.raises(AmbientMismatchError):
        intersect(a, monomial_ideal(("x", "z"), [(1, 0)]))


@given(ideals_st(max_vars=3), ideals_st(max_vars=3))
@settings(max_examples=40)
def test_intersect_membership(a, b):
    if a.variables != b.variables:
        return
    both = intersect(a, b)
    for m in both.gens:
        assert contains_monomial(a, m) and contains_monomial(b, m)
    for m in a.gens:
        if contains_monomial(b, m):
            assert contains_monomial(both, m)


@pytest.mark.parametrize("n", range(2, 6))
def test_symbolic_power_routes_agree(n):
    for g in enumerate_graphs(n, connected=True):
        if g.edge_count() == 0:
            continue
        for k in (1, 2, 3):
            assert symbolic_power_via_gk(g, k).gens == symbolic_power_bruteforce(g, k).gens


@pytest.mark.parametrize("seed", range(6))
def test_symbolic_power_routes_agree_random(seed):
    g = random_graph(6 + seed % 3, 0.4, seed)
    if g.edge_count() == 0:
        return
    assert symbolic_power_via_gk(g, 2).gens == symbolic_power_bruteforce(g, 2).gens


def test_symbolic_first_power_is_cover_ideal():
    g = cycle(5)
    assert symbolic_power_via_gk(g, 1).gens == cover_ideal(g).gens


def test_symbolic_generators_cover_every_edge_heavily():
    """Exponent sums across each edge reach the power, and minimality holds."""
    for g in (cycle(5), path(5), random_graph(6, 0.5, 1)):
        for k in (2, 3):
            jk = symbolic_power_via_gk(g, k)
            for m in jk.gens:
                assert all(m[u] + m[v] >= k for u, v in g.edges())


@pytest.mark.parametrize("n", range(2, 7))
def test_bipartite_ordinary_equals_symbolic(n):
    for g in enumerate_graphs(n, bipartite=True):
        if g.edge_count() == 0:
            continue
        j = cover_ideal(g)
        for k in (2, 3):
            assert power(j, k).gens == symbolic_power_bruteforce(g, k).gens


def test_ordinary_within_symbolic_for_odd_cycle():
    g = cycle(5)
    ordinary = power(cover_ideal(g), 2)
    symbolic = symbolic_power_bruteforce(g, 2)
    for m in ordinary.gens:
        assert contains_monomial(symbolic, m)
    assert ordinary.gens != symbolic.gens  # x1..x5 squared-cover pattern appears


# --- polarization -------------------------------------------------------------------


@given(ideals_st())
@settings(max_examples=60)
def test_polarize_depolarize_roundtrip(i):
    p, pmap = polarize(i)
    assert p.is_squarefree()
    assert depolarize(p, pmap).gens == i.gens


def test_polarization_layer_names():
    i = monomial_ideal(("x", "y"), [(2, 1)])
    p, pmap = polarize(i)
    assert p.variables == ("x_1", "x_2", "y_1")
    assert pmap.polar_index(0, 2) == 1
    assert pmap.source_of(2) == (1, 1)


def test_polarized_symbolic_power_is_layered_cover_ideal():
    for g in (path(3), cycle(4), cycle(5)):
        for k in (2, 3):
            jk = symbolic_power_bruteforce(g, k)
            p, _ = polarize(jk)
            layered = cover_ideal(build_gk(g, k).graph)
            ours = {
                frozenset(v for v, e in zip(p.variables, m) if e) for m in p.gens
            }
            theirs = {
                frozenset(v for v, e in zip(layered.variables, m) if e)
                for m in layered.gens
            }
            assert ours == theirs


def test_depolarize_guards():
    i = monomial_ideal(("x", "y"), [(2, 1)])
    p, pmap = polarize(i)
    with pytest.raises(AmbientMismatchError):
        depolarize(monomial_ideal(("a", "b"), [(1, 1)]), pmap)
    with pytest.raises(NonSquarefreeError):
        depolarize(monomial_ideal(p.variables, [(2, 0, 0)]), pmap)


# --- truncation ---------------------------------------------------------------------


def _truncation_oracle(i, d):
    from coverlab.ideals import _monomials_of_degree

    keep = [
        m
        for m in _monomials_of_degree(len(i.variables), d)
        if contains_monomial(i, m)
    ]
    return monomial_ideal(i.variables, keep)


@given(ideals_st(max_vars=3, max_exp=2), st.integers(0, 5))
@settings(max_examples=50)
def test_truncation_matches_membership_oracle(i, d):
    assert truncation(i, d).gens == _truncation_oracle(i, d).gens


def test_truncation_below_degrees_is_zero():
    i = monomial_ideal(("x", "y"), [(1, 1)])
    assert truncation(i, 1).is_zero
    assert truncation(i, 2).gens == ((1, 1),)
    assert len(truncation(i, 3).gens) == 2


# --- text and json ------------------------------------------------------------------


def test_monomial_text_forms():
    assert monomial_to_text((2, 0, 1), ("x1", "x2", "x3")) == "x1^2*x3"
    assert monomial_to_text((0, 0), ("x", "y")) == "1"


def test_ideal_text_roundtrip():
    i = monomial_ideal(("x1", "x2", "x10"), [(2, 1, 0), (0, 0, 3)])
    back = ideal_from_text(ideal_to_text(i), i.variables)
    assert back.gens == i.gens and back.variables == i.variables


def test_ideal_text_natural_variable_inference():
    i = ideal_from_text("x2*x10\nx1^2\n")
    assert i.variables == ("x1", "x2", "x10")


def test_ideal_text_conventions_and_errors():
    assert ideal_from_text("0\n").is_zero
    assert ideal_from_text("1\n").gens == ((),)
    with pytest.raises(IdealParseError) as err:
        ideal_from_text("x1\nx2^oops\n")
    assert err.value.line == 2
    with pytest.raises(IdealParseError):
        ideal_from_text("x1*zz\n", variables=("x1",))


def test_ideal_json_roundtrip():
    i = cover_ideal(cycle(5))
    back = ideal_from_json(ideal_to_json(i))
    assert back == i


def test_zero_ideal_text():
    zero = monomial_ideal(("x",), [])
    assert ideal_to_text(zero) == "0\n"
    assert zero.is_zero
