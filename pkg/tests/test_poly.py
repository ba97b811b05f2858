"""Exact multivariate polynomial arithmetic and gcd."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liepencil.poly import (
    NEG_INF,
    Polynomial,
    VarKind,
    VarRegistry,
    content,
    div_exact,
    divides,
    normalize,
    poly_gcd,
    try_divide,
)

from helpers import polys_equal_at_random, random_point

REG = VarRegistry(3, params=("t",))


def V(name):
    return REG.var(name)


# Small random polynomials over x1..x3, a1..a3, t.
_names = st.sampled_from([f"x{k}" for k in (1, 2, 3)] + [f"a{k}" for k in (1, 2, 3)] + ["t"])
_coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


@st.composite
def polys(draw, max_terms=4, max_factors=2):
    p = REG.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        term = REG.constant(draw(_coeffs))
        for _ in range(draw(st.integers(0, max_factors))):
            term = term * V(draw(_names))
        p = p + term
    return p


def test_zero_and_constants():
    assert REG.zero().is_zero()
    assert not REG.zero()
    five = REG.constant(5)
    assert five.is_constant()
    assert five.constant_value() == 5
    assert five.total_degree() == 0
    assert REG.zero().total_degree() == NEG_INF


def test_arithmetic_against_evaluation():
    rng = random.Random(7)
    x1, a2, t = V("x1"), V("a2"), V("t")
    p = (x1 + 2 * a2) * (x1 - t) + Fraction(1, 2)
    q = x1 * x1 - x1 * t + 2 * a2 * x1 - 2 * a2 * t + Fraction(1, 2)
    assert p == q
    for _ in range(6):
        point = random_point(REG, rng)
        want = (point["x1"] + 2 * point["a2"]) * (point["x1"] - point["t"]) + Fraction(1, 2)
        assert p.evaluate(point) == want


def test_power():
    x1 = V("x1")
    assert (x1 + 1) ** 3 == x1 ** 3 + 3 * x1 ** 2 + 3 * x1 + 1
    assert (x1 + 1) ** 0 == REG.one()
    with pytest.raises(ValueError):
        (x1 + 1) ** -1


def test_display_order_pins():
    # within a monomial: parameters, then coordinates, then points, then lambda
    x1, a1, t = V("x1"), V("a1"), V("t")
    lam = REG.pencil()
    assert str(x1 * a1) == "x1*a1"
    assert str(-2 * t * V("x2")) == "-2*t*x2"
    assert str(V("a3") * lam + V("x3")) == "a3*lambda + x3"
    # significance across monomials: lambda before points before coordinates
    assert str(lam + V("a1") + V("x1")) == "lambda + a1 + x1"


def test_degree_in_kinds():
    x1, a1, t = V("x1"), V("a1"), V("t")
    p = x1 * x1 * a1 + t * x1
    assert p.degree_in([VarKind.COORDINATE]) == 2
    assert p.degree_in([VarKind.POINT]) == 1
    assert p.degree_in([VarKind.PARAMETER]) == 1
    assert REG.zero().degree_in([VarKind.COORDINATE]) == NEG_INF


def test_substitute_shift():
    x1, a1 = V("x1"), V("a1")
    lam = REG.pencil()
    p = x1 * x1
    shifted = p.substitute({"x1": x1 + lam * a1})
    assert shifted == x1 * x1 + 2 * lam * x1 * a1 + lam * lam * a1 * a1


def test_normalize_coprime_integer_positive_lead():
    x1, x2 = V("x1"), V("x2")
    p = Fraction(-2, 3) * x1 * x2 - Fraction(4, 3) * x2
    n = normalize(p)
    assert n == x1 * x2 + 2 * x2
    assert content(n) == 1
    assert normalize(REG.zero()).is_zero()


def test_exact_division():
    x1, x2, t = V("x1"), V("x2"), V("t")
    p = (x1 + t) * (x2 - 2)
    assert div_exact(p, x1 + t) == x2 - 2
    assert try_divide(p, x2) is None
    assert divides(x1 + t, p)
    assert not divides(x1 + 1, p)
    with pytest.raises(ZeroDivisionError):
        div_exact(p, REG.zero())


def test_gcd_known_factorizations():
    x1, x2, t = V("x1"), V("x2"), V("t")
    g = x1 + 2 * x2
    p = g * (x1 - t)
    q = g * (x2 + 3) * (x1 - t + 1)
    got = poly_gcd(p, q)
    assert got == normalize(g)
    # coprime pair
    assert poly_gcd(x1 + 1, x2 + 1) == REG.one()
    # gcd with zero is the (normalized) other argument
    assert poly_gcd(REG.zero(), p) == normalize(p)


@given(polys(), polys())
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(p, q):
    g = poly_gcd(p, q)
    if p.is_zero() and q.is_zero():
        assert g.is_zero()
        return
    assert divides(g, p)
    assert divides(g, q)
    assert g == normalize(g)


@given(polys(), polys())
@settings(max_examples=60, deadline=None)
def test_gcd_symmetric(p, q):
    assert poly_gcd(p, q) == poly_gcd(q, p)


@given(polys(), polys())
@settings(max_examples=50, deadline=None)
def test_gcd_absorbs_common_factor(p, q):
    g0 = poly_gcd(p, q)
    m = V("x1") + 2
    assert poly_gcd(p * m, q * m) == normalize(g0 * m) or (p.is_zero() and q.is_zero())


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms_via_evaluation(p, q, r):
    rng = random.Random(13)
    assert polys_equal_at_random(p * (q + r), p * q + p * r, rng)
    assert polys_equal_at_random((p + q) * r, p * r + q * r, rng)
    assert polys_equal_at_random(p * q, q * p, rng)


@given(polys())
@settings(max_examples=40, deadline=None)
def test_evaluation_is_ring_hom(p):
    rng = random.Random(29)
    point = random_point(REG, rng)
    q = p * p - 3 * p + 1
    want = p.evaluate(point) ** 2 - 3 * p.evaluate(point) + 1
    assert q.evaluate(point) == want


def test_foreign_registry_rejected():
    other = VarRegistry(3, params=("t",))
    assert other == REG  # same shape, equal
    different = VarRegistry(4)
    with pytest.raises(Exception):
        V("x1") + different.var("x1")
