from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from stirpoly.polynomial import Poly, interpolate, poly_coefficient, poly_derivative, poly_eval

n = Poly.monomial(1)
small_rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small_rats, max_size=6).map(Poly)


def test_trim_and_zero():
    assert Poly([1, 0, 0]).coeffs == (F(1),)
    assert Poly([0, 0]).is_zero()
    assert Poly().degree is None
    assert Poly([3]).degree == 0


def test_arithmetic_examples():
    p1 = n - F(1, 3)
    assert p1 + F(1, 3) == n
    assert (n * n - n) * 0 == Poly()
    # P_2 from the even recursion at m = 1, expanded by hand
    assert 3 * n * p1 - Poly.monomial(0).mul_by_power(2).scale(2) == n * n - n


def test_eval():
    p1 = Poly([F(-1, 3), 1])
    assert poly_eval(p1, 0) == F(-1, 3)
    assert poly_eval(Poly(), F(7, 2)) == 0
    assert poly_eval(Poly([0, -1, 1]), 1) == 0


def test_coefficient():
    p3 = Poly([F(2, 15), F(1, 3), -2, 1])
    assert poly_coefficient(p3, 1) == F(1, 3)
    assert poly_coefficient(p3, 5) == 0


@given(polys, st.integers(min_value=0, max_value=40))
def test_coefficient_beyond_degree_is_zero(p, extra):
    assert poly_coefficient(p, len(p.coeffs) + extra) == 0


def test_derivative():
    assert poly_derivative(n * n - n) == 2 * n - 1
    assert poly_derivative(Poly([5])).is_zero()


def test_text_form():
    p = Poly([F(2, 15), F(1, 3), -2, 1])
    assert p.to_text("n") == "n^3 - 2*n^2 + 1/3*n + 2/15"
    assert Poly([0, -1]).to_text() == "-x"
    assert Poly().to_text() == "0"
    assert p.to_json() == {"coeffs": ["2/15", "1/3", "-2", "1"]}


@given(polys)
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == Poly()


@given(polys, small_rats)
def test_eval_is_homomorphism(a, x):
    b = Poly([1, x, 2])
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


def test_interpolate_examples():
    assert interpolate([(0, 1), (1, 1), (2, 1)]) == Poly([1])
    assert interpolate([(0, 1), (1, 2), (2, 5)]) == Poly([1, 0, 1])
    # T(3,3) = 2, T(4,3) = 11 in the printed table
    pts = [(m, F(8 * t, m * (m - 1) * (m - 2))) for m, t in ((3, 2), (4, 11))]
    assert interpolate(pts) == Poly([F(-1, 3), 1])


def test_interpolate_rejects_bad_input():
    with pytest.raises(ValueError):
        interpolate([])
    with pytest.raises(ValueError):
        interpolate([(1, 2), (1, 3)])


@settings(max_examples=60)
@given(st.lists(st.tuples(small_rats, small_rats), min_size=1, max_size=12, unique_by=lambda p: p[0]))
def test_interpolate_hits_every_point(points):
    p = interpolate(points)
    assert p.is_zero() or p.degree < len(points)
    for x, y in points:
        assert p(x) == y


@given(polys, st.lists(small_rats, min_size=7, max_size=7, unique=True))
def test_interpolate_recovers_polynomial(p, xs):
    assert interpolate([(x, p(x)) for x in xs]) == p
