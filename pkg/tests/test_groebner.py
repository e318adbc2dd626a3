from fractions import Fraction
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from wps.core import make_space, parse_polynomial, random_polynomial
from wps.errors import NonHomogeneousInput, ResourceLimit
from wps.groebner import GREVLEX, MonomialOrder, PolyIdeal, buchberger, cone_is_origin_only, groebner, has_torus_zero
from wps.quasismooth import finite_field_common_zero

P112 = make_space([1, 1, 2])


def P(terms):
    return {tuple(e): Fraction(c) for e, c in terms.items()}


def as_set(gb):
    return {frozenset(p.items()) for p in gb.polys}


def test_examples():
    gb = groebner([P({(1, 0): 1}), P({(0, 1): 1})], 2)
    assert as_set(gb) == {frozenset({(1, 0): 1}.items()), frozenset({(0, 1): 1}.items())}

    gb = groebner([P({(2,): 1, (0,): -1}), P({(1,): 1, (0,): -1})], 1)
    assert gb.polys == [{(1,): 1, (0,): -1}]

    gb = groebner([P({(3, 0, 0): 4}), P({(0, 3, 0): 4}), P({(0, 0, 1): 2})], 3)
    assert sorted(gb.leading_monomials) == sorted([(3, 0, 0), (0, 3, 0), (0, 0, 1)])
    assert all(set(p.values()) == {1} for p in gb.polys)


def test_zero_generators_are_dropped():
    assert PolyIdeal([{}, P({(1,): 1})], 1).generators == (P({(1,): 1}),)


def _spoly(f, g, order):
    lf = max(f, key=order.key)
    lg = max(g, key=order.key)
    L = tuple(max(a, b) for a, b in zip(lf, lg))
    out = {}
    for p, lm, sign in ((f, lf, 1), (g, lg, -1)):
        shift = tuple(a - b for a, b in zip(L, lm))
        for e, c in p.items():
            e2 = tuple(a + b for a, b in zip(e, shift))
            out[e2] = out.get(e2, 0) + sign * c / p[lm]
    return {e: c for e, c in out.items() if c}


def check_reduced_basis(gb):
    order = gb.order
    lms = gb.leading_monomials
    for p, lm in zip(gb.polys, lms):
        assert p[lm] == 1
        for q, lq in zip(gb.polys, lms):
            if q is not p:
                assert not any(all(a <= b for a, b in zip(lq, e)) for e in p)
    for i in range(len(gb.polys)):
        for j in range(i + 1, len(gb.polys)):
            assert gb.reduce(_spoly(gb.polys[i], gb.polys[j], order)) == {}


def random_system(rng, ws):
    X = make_space(ws, check_well_formed=False)
    k = rng.randint(1, X.nvars + 1)
    gens = []
    for _ in range(k):
        d = rng.randint(1, 2 * max(ws))
        f = random_polynomial(X, d, rng, rng.choice([0.3, 0.6, 1.0]))
        if not f.is_zero():
            gens.append(dict(f.terms))
    return X, gens


systems = st.tuples(
    st.sampled_from([(1, 1), (1, 2), (1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 3)]),
    st.integers(0, 10**6),
)


@settings(max_examples=40, deadline=None)
@given(systems)
def test_buchberger_criterion_post_hoc(case):
    ws, seed = case
    X, gens = random_system(random.Random(seed), ws)
    gb = groebner(gens, X.nvars)
    check_reduced_basis(gb)
    for g in gens:
        assert g in gb


@settings(max_examples=25, deadline=None)
@given(systems)
def test_agrees_with_sympy(case):
    ws, seed = case
    X, gens = random_system(random.Random(seed), ws)
    if not gens:
        return
    syms = sympy.symbols(f"v0:{X.nvars}")
    exprs = [sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([s**k for s, k in zip(syms, e)]) for e, c in g.items()) for g in gens]
    ref = sympy.groebner(exprs, *syms, order="grevlex")
    expected = set()
    for p in ref.exprs:
        poly = sympy.Poly(p, *syms)
        terms = {m: Fraction(int(c.p), int(c.q)) for m, c in zip(poly.monoms(), poly.coeffs())}
        lc = terms[max(terms, key=GREVLEX.key)]
        expected.add(frozenset((m, c / lc) for m, c in terms.items()))
    assert as_set(groebner(gens, X.nvars)) == expected


def test_permuted_order_is_still_a_basis():
    gens = [P({(2, 0, 0): 1, (0, 1, 1): -1}), P({(0, 2, 0): 1, (1, 0, 1): -1})]
    order = MonomialOrder(perm=(2, 0, 1))
    gb = buchberger(PolyIdeal(gens, 3), order)
    check_reduced_basis(gb)


def test_unknown_order_kind():
    with pytest.raises(ValueError):
        MonomialOrder(kind="lex")


def test_deterministic():
    rng = random.Random(7)
    X, gens = random_system(rng, (1, 1, 2))
    a = groebner(gens, X.nvars)
    b = groebner(list(gens), X.nvars)
    assert a.polys == b.polys
    assert [list(p.items()) for p in a.polys] == [list(p.items()) for p in b.polys]


def test_resource_limit(monkeypatch):
    f = parse_polynomial(P112, 4, "x*y^3 + x^2*z + y^2*z + z^2")
    gens = [f.partial(i) for i in range(3)]
    with pytest.raises(ResourceLimit):
        cone_is_origin_only(gens, P112.weights, max_steps=2)
    monkeypatch.setenv("WPS_LIMIT_STEPS", "2")
    with pytest.raises(ResourceLimit):
        cone_is_origin_only(gens, P112.weights)
    monkeypatch.delenv("WPS_LIMIT_STEPS")
    assert cone_is_origin_only(gens, P112.weights)


def partials(text, d=4, X=P112):
    f = parse_polynomial(X, d, text)
    return [f.partial(i) for i in range(X.nvars)]


def test_cone_examples():
    assert cone_is_origin_only(partials("x^4 + y^4 + z^2"), P112.weights)
    assert not cone_is_origin_only(partials("x^4 + y^4"), P112.weights)
    assert not cone_is_origin_only(partials("x^2*z + y^4"), P112.weights)


def test_cone_rejects_inhomogeneous():
    with pytest.raises(NonHomogeneousInput):
        cone_is_origin_only([P({(1, 0, 0): 1, (0, 0, 1): 1})], P112.weights)


def test_torus_zero_examples():
    f = parse_polynomial(P112, 4, "x^4 + y^4 + z^2")
    assert not has_torus_zero([f] + [f.partial(i) for i in range(3)], 3)
    assert has_torus_zero([P({(1, 0): 1, (0, 1): -1})], 2)
    assert not has_torus_zero([P({(1, 0): 1}), P({(0, 1): 1})], 2)


def test_torus_zero_needs_positive_nvars():
    with pytest.raises(ValueError):
        has_torus_zero([], 0)


@settings(max_examples=30, deadline=None)
@given(systems)
def test_finite_field_binding_direction(case):
    """Origin-only over Q-bar cannot coexist with nonzero zeros over every
    tested prime on random systems."""
    ws, seed = case
    X, gens = random_system(random.Random(seed), ws)
    if not gens:
        return
    if cone_is_origin_only(gens, X.weights):
        hits = [finite_field_common_zero(gens, X.nvars, p) is not None for p in (11, 31)]
        assert not all(hits)


@settings(max_examples=30, deadline=None)
@given(systems)
def test_weighted_order_spans_the_same_ideal(case):
    ws, seed = case
    X, gens = random_system(random.Random(seed), ws)
    plain = groebner(gens, X.nvars)
    weighted = groebner(gens, X.nvars, MonomialOrder(weights=X.weights))
    check_reduced_basis(weighted)
    assert all(p in plain for p in weighted.polys)
    assert all(p in weighted for p in plain.polys)


@settings(max_examples=30, deadline=None)
@given(systems)
def test_torus_zero_independent_of_order(case):
    ws, seed = case
    X, gens = random_system(random.Random(seed), ws)
    assert has_torus_zero(gens, X.nvars) == has_torus_zero(gens, X.nvars, weights=X.weights)


def test_weighted_order_validation():
    with pytest.raises(ValueError):
        MonomialOrder(weights=(1, 0))
    with pytest.raises(NonHomogeneousInput):
        has_torus_zero([P({(1, 0, 0): 1, (0, 0, 1): 1})], 3, weights=P112.weights)
