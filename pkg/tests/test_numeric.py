import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stirpoly.numeric import binomial, factorial, falling_factorial, format_rational, parse_rational, rat


def test_rat_normalizes():
    assert rat(2, 4) == Fraction(1, 2)
    r = rat(-3, -6)
    assert (r.numerator, r.denominator) == (1, 2)
    z = rat(0, 5)
    assert (z.numerator, z.denominator) == (0, 1)


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_arithmetic_examples():
    assert rat(1, 3) + rat(1, 6) == rat(1, 2)
    assert (rat(-1, 3) * 0) == rat(0, 1)
    assert rat(2, 15) / rat(1, 3) == rat(2, 5)
    with pytest.raises(ZeroDivisionError):
        rat(1, 2) / rat(0, 1)


@given(st.integers(), st.integers().filter(lambda q: q != 0))
def test_rat_invariants(p, q):
    r = rat(p, q)
    assert r.denominator > 0
    assert math.gcd(abs(r.numerator), r.denominator) == 1


@given(st.fractions())
def test_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_text_form():
    assert format_rational(rat(-2, 15)) == "-2/15"
    assert format_rational(rat(6, 3)) == "2"
    assert parse_rational("-7") == -7
    for bad in ("1 /2", "1/", "", "1/-2", "0.5"):
        with pytest.raises(ValueError):
            parse_rational(bad)
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@pytest.mark.parametrize("n,want", [(0, 1), (4, 24), (6, 720)])
def test_factorial(n, want):
    assert factorial(n) == want


def _pascal(n):
    rows = [[1]]
    for _ in range(n):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def test_binomial_against_pascal():
    rows = _pascal(30)
    assert binomial(9, 4) == rows[9][4] == 126
    assert binomial(5, 2) == 10
    for n in range(31):
        assert binomial(n, 0) == 1
        assert binomial(n, n + 3) == 0
        for k in range(n + 1):
            assert binomial(n, k) == rows[n][k] == binomial(n, n - k)
            if k >= 1:
                assert binomial(n + 1, k) == binomial(n, k) + binomial(n, k - 1)


def test_falling_factorial():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(17, 0) == 1
    assert falling_factorial(4, 6) == 0
    assert falling_factorial(-2, 3) == -24
    for n in range(31):
        assert falling_factorial(n, n) == factorial(n)
    with pytest.raises(ValueError):
        falling_factorial(3, -1)
