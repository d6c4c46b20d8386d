from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sylvester.poly import Poly, poly_add, poly_eval, poly_mul, poly_scale, poly_shift

small = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(small, max_size=9).map(Poly)
nonzero_polys = st.builds(
    lambda body, lead: Poly(body + [lead]), st.lists(small, max_size=8), small.filter(bool)
)

x = Poly([0, 1])


def test_canonical_form():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).coeffs == ()
    assert Poly().degree == -1


def test_ring_examples():
    assert poly_add(x, -x) == Poly()
    assert poly_add(x, -x).coeffs == ()
    assert poly_mul(Poly([1, 1]), Poly([1, -1])) == Poly([1, 0, -1])
    assert poly_scale(Poly([2, 4]), Fraction(1, 2)) == Poly([1, 2])


def test_eval_examples():
    assert poly_eval(Poly([1, 0, 1]), 2) == 5
    assert poly_eval(Poly(), Fraction(7, 3)) == 0
    assert poly_eval(Poly([Fraction(3, 4), Fraction(1, 2)]), 5) == Fraction(13, 4)


def test_shift_examples():
    assert poly_shift(Poly([0, 0, 1]), 1) == Poly([1, 2, 1])
    p = Poly([3, -1, 5])
    assert poly_shift(p, 0) == p


@given(polys, small, small)
def test_shift_matches_evaluation(a, h, t):
    assert poly_eval(poly_shift(a, h), t) == poly_eval(a, t + h)


@given(polys, small, small)
def test_shift_composes(a, h1, h2):
    assert poly_shift(poly_shift(a, h1), h2) == poly_shift(a, h1 + h2)


@given(nonzero_polys, nonzero_polys)
def test_mul_degree(a, b):
    assert poly_mul(a, b).degree == a.degree + b.degree


@given(polys, polys, small)
def test_operations_match_evaluation(a, b, t):
    assert poly_eval(a + b, t) == poly_eval(a, t) + poly_eval(b, t)
    assert poly_eval(a * b, t) == poly_eval(a, t) * poly_eval(b, t)


@given(polys)
def test_json_roundtrip(a):
    assert Poly.from_json(a.to_json()) == a


def test_immutable():
    with pytest.raises(AttributeError):
        Poly([1]).coeffs = ()


def test_str():
    assert str(Poly([Fraction(3, 4), Fraction(1, 2)])) == "1/2*s + 3/4"
    assert str(Poly([1, -1, 0, 2])) == "2*s^3 - s + 1"
    assert str(Poly()) == "0"
