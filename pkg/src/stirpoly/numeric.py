"""Exact integer/rational helpers.

Rationals are :class:`fractions.Fraction`, which is already normalized
(positive denominator, lowest terms, zero as 0/1) and immutable.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")


def rat(p: int, q: int = 1) -> Fraction:
    if q == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    """Render as ``p/q``, or ``p`` when integral."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    return rat(int(num), int(den) if den else 1)


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)


def falling_factorial(n: int, count: int) -> int:
    """n (n-1) ... (n-count+1); ``count`` is the number of factors."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = 1
    for i in range(count):
        out *= n - i
    return out
