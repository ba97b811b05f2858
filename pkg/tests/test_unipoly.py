"""Dense univariate polynomials over the rationals."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liepencil import unipoly
from liepencil.unipoly import (
    deg,
    div_exact,
    divmod_poly,
    evaluate,
    format_poly,
    gcd_poly,
    mul,
    pencil_det,
    primitive,
    rational_roots,
    sqrt_perfect,
)

from helpers import laplace_det

coeffs = st.fractions(min_value=-6, max_value=6, max_denominator=5)
polys = st.lists(coeffs, min_size=0, max_size=5)


def from_roots(roots, lead=1):
    p = [Fraction(lead)]
    for r in roots:
        p = mul(p, [-Fraction(r), Fraction(1)])
    return p


def test_divmod_reconstructs():
    p = from_roots([1, 2, 3])
    q = from_roots([2])
    quo, rem = divmod_poly(p, q)
    assert unipoly.add(mul(quo, q), rem) == unipoly.trim(p)
    assert unipoly.is_zero(rem)
    assert div_exact(p, q) == from_roots([1, 3])


@given(polys, polys)
@settings(max_examples=80, deadline=None)
def test_divmod_identity(p, q):
    p, q = unipoly.trim(p), unipoly.trim(q)
    if unipoly.is_zero(q):
        return
    quo, rem = divmod_poly(p, q)
    assert unipoly.add(mul(quo, q), rem) == p
    assert deg(rem) < deg(q)


def test_gcd_of_products():
    g = from_roots([5])
    p = mul(g, from_roots([1, -1]))
    q = mul(g, from_roots([7]))
    got = gcd_poly(p, q)
    # primitive integer normalization: x - 5
    assert got == [Fraction(-5), Fraction(1)]


def test_primitive_scales_out_content():
    p = [Fraction(4, 3), Fraction(-2, 3)]
    assert primitive(p) == [Fraction(-2), Fraction(1)] or primitive(p) == [Fraction(2), Fraction(-1)]


def test_sqrt_perfect_squares():
    p = from_roots([1, 1, -2, -2], lead=9)
    root = sqrt_perfect(p)
    assert root is not None
    assert mul(root, root) == unipoly.trim(p)
    assert sqrt_perfect(from_roots([1])) is None  # odd degree
    assert sqrt_perfect(from_roots([1, 2])) is None  # not a square
    assert sqrt_perfect([Fraction(4)]) == [Fraction(2)]


@given(polys)
@settings(max_examples=60, deadline=None)
def test_sqrt_perfect_roundtrip(p):
    square = mul(p, p)
    root = sqrt_perfect(square)
    if unipoly.is_zero(square):
        assert root == [] or root is None
        return
    assert root is not None
    assert mul(root, root) == unipoly.trim(square)


def test_rational_roots_with_multiplicity():
    p = from_roots([Fraction(1, 2), Fraction(1, 2), -3], lead=4)
    roots, residual, complete = rational_roots(p)
    assert dict(roots) == {Fraction(1, 2): 2, Fraction(-3): 1}
    assert deg(residual) == 0
    assert complete


def test_rational_roots_order_by_magnitude():
    p = from_roots([5, -1, 2])
    roots, _, _ = rational_roots(p)
    assert [r for r, _ in roots] == [Fraction(-1), Fraction(2), Fraction(5)]


def test_rational_roots_irrational_residual():
    # x^2 - 2 has no rational roots
    p = [Fraction(-2), Fraction(0), Fraction(1)]
    roots, residual, complete = rational_roots(p)
    assert roots == []
    assert deg(residual) == 2
    assert complete


def test_evaluate():
    p = from_roots([1, 2])
    assert evaluate(p, Fraction(1)) == 0
    assert evaluate(p, Fraction(0)) == 2
    assert evaluate(p, Fraction(3)) == 2


def test_format_poly():
    assert format_poly([Fraction(1), Fraction(-2), Fraction(1)], var="t") == "t^2 - 2*t + 1"
    assert format_poly([], var="t") == "0"
    assert format_poly([Fraction(1, 2)]) == "1/2"


def test_pencil_det_against_laplace():
    rng = random.Random(17)
    for n in (1, 2, 3, 4):
        a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        got = pencil_det(a, b)
        # oracle: det(A + tB) evaluated at n+1 points determines the
        # degree-n polynomial; compare values instead of coefficients
        for t in range(n + 2):
            rows = [
                [Fraction(a[i][j] + t * b[i][j]) for j in range(n)]
                for i in range(n)
            ]
            assert evaluate(got, Fraction(t)) == laplace_det(rows)
