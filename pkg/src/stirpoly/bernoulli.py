"""Bernoulli numbers and polynomials.

Convention: B_1 = -1/2, so that B_m(0) = B_m for every m.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import List

from .numeric import binomial, factorial
from .polynomial import Poly


class BernoulliCache:
    """Memoized B_n and B_m(x); one lock guards all extension."""

    def __init__(self):
        self._numbers: List[Fraction] = [Fraction(1)]
        self._polys: List[Poly] = []
        self._lock = threading.Lock()

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be >= 0")
        with self._lock:
            nums = self._numbers
            while len(nums) <= n:
                k = len(nums)
                # sum_{j<=k} C(k+1, j) B_j = 0
                s = sum(binomial(k + 1, j) * nums[j] for j in range(k))
                nums.append(-s / (k + 1))
            return nums[n]

    def polynomial(self, m: int) -> Poly:
        if m < 0:
            raise ValueError("m must be >= 0")
        self.number(m)
        with self._lock:
            while len(self._polys) <= m:
                d = len(self._polys)
                # ascending coefficients: x^(d-k) carries C(d, k) B_k
                coeffs = [binomial(d, d - e) * self._numbers[d - e] for e in range(d + 1)]
                self._polys.append(Poly(coeffs))
            return self._polys[m]


_default = BernoulliCache()


def bernoulli_number(n: int, cache: BernoulliCache = _default) -> Fraction:
    return cache.number(n)


def bernoulli_polynomial(m: int, cache: BernoulliCache = _default) -> Poly:
    return cache.polynomial(m)


def recursion_weight(m: int, k: int) -> Fraction:
    """m! (2m-k+1) / ((k+1)! (m-k)!), shared by the odd-B and even-P recursions."""
    return Fraction(factorial(m) * (2 * m - k + 1), factorial(k + 1) * factorial(m - k))


def bernoulli_odd_via_eq10(m: int, cache: BernoulliCache = _default) -> Poly:
    """Build B_{2m+1}(x) from B_{m}(x) .. B_{2m}(x) by the inhomogeneous recursion."""
    if m < 1:
        raise ValueError("m must be >= 1")
    x = Poly.monomial(1)
    out = (2 * m + 1) * x * cache.polynomial(2 * m)
    for k in range(1, m + 1):
        w = (-2) ** k * recursion_weight(m, k)
        out += cache.polynomial(2 * m - k).mul_by_power(k + 1).scale(w)
    out += Poly.monomial(2 * m, Fraction((-1) ** (m + 1), 2))
    return out
