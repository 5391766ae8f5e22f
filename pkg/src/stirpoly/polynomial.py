"""Dense univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .numeric import format_rational, parse_rational

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has no coefficients and degree ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "Poly":
        return cls([0] * e + [c])

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> Fraction:
        if j < 0:
            raise ValueError("negative power")
        return self.coeffs[j] if j < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # ring operations

    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        return Poly([c * x for x in self.coeffs])

    def mul_by_power(self, e: int) -> "Poly":
        """Multiply by x**e."""
        if e < 0:
            raise ValueError("negative exponent")
        if self.is_zero():
            return self
        return Poly([0] * e + list(self.coeffs))

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # text/json forms

    def to_text(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = format_rational(mag)
            else:
                pw = var if e == 1 else f"{var}^{e}"
                body = pw if mag == 1 else f"{format_rational(mag)}*{pw}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_latex(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if mag.denominator == 1:
                num = "" if (mag == 1 and e > 0) else str(mag.numerator)
            else:
                num = f"{{\\textstyle\\frac{{{mag.numerator}}}{{{mag.denominator}}}}}"
            pw = "" if e == 0 else (var if e == 1 else f"{var}^{{{e}}}")
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign}{num}{pw}")
        return "".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        return cls(parse_rational(s) for s in obj["coeffs"])


def poly_eval(p: Poly, x: Scalar) -> Fraction:
    return p(x)


def poly_coefficient(p: Poly, j: int) -> Fraction:
    return p.coefficient(j)


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def interpolate(points: Sequence[Tuple[Scalar, Scalar]]) -> Poly:
    """Exact Newton divided-difference interpolation.

    Returns the unique polynomial of degree < len(points) through ``points``.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    table = [Fraction(y) for _, y in points]
    n = len(xs)
    # in-place divided differences: table[i] becomes f[x_0..x_i]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    # nested Newton form, innermost first
    result = Poly([table[-1]])
    for i in range(n - 2, -1, -1):
        result = result * Poly([-xs[i], 1]) + table[i]
    return result
