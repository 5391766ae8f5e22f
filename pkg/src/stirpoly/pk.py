"""The monic polynomials P_k(n) attached to the columns of the T triangle.

Column k+2 of T satisfies

    T(n, k+2) = n(n-1)...(n-k-1) / (2^(k+1) (k+1)!) * P_k(n).

Three routes produce P_k:

* ``pk_from_stirling`` interpolates the column data. This is the oracle.
* ``pk_even_via_eq9`` builds P_{2m} from P_{m-1} .. P_{2m-1}.
* ``pk_next_via_eq11`` builds P_{m+1} from P_0 .. P_m and Bernoulli data.

The Bernoulli-coefficient recursion is only correct with the sign of its
``2 n B_{m+1}(0)`` term flipped relative to the printed formula; the
flipped variant (``EQ11_SIGN = -1``) is the default. ``resolve_eq11_sign``
reruns the comparison against the oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .bernoulli import BernoulliCache, _default as _default_cache, recursion_weight
from .numeric import factorial, falling_factorial
from .polynomial import Poly, interpolate
from .stirling import StirlingTable, build_stirling_table, t_number

EQ11_SIGN = -1

METHODS = ("interp", "recursion", "cross-check-all")

N = Poly.monomial(1)

# Base cases for the recursions; both are also derived by interpolation.
P0 = Poly([1])
P1 = Poly([Fraction(-1, 3), 1])


class PkConsistencyError(ArithmeticError):
    """A derived P_k violates a structural property (degree, monicity, integrality)."""


class CrossCheckError(AssertionError):
    """Two derivation routes disagree."""

    def __init__(self, k: int, method_a: str, method_b: str, a: Poly, b: Poly):
        self.k, self.method_a, self.method_b = k, method_a, method_b
        j = next(
            i for i in range(max(len(a.coeffs), len(b.coeffs)))
            if a.coefficient(i) != b.coefficient(i)
        )
        self.power = j
        self.values = (a.coefficient(j), b.coefficient(j))
        super().__init__(
            f"P_{k}: {method_a} and {method_b} differ at n^{j}: "
            f"{self.values[0]} vs {self.values[1]}\n"
            f"  {method_a}: {a.to_text('n')}\n  {method_b}: {b.to_text('n')}"
        )


@dataclass(frozen=True)
class PkSequence:
    polys: Tuple[Poly, ...]
    provenance: Tuple[str, ...]
    # methods that were checked against the stored polynomial, per index
    verified: Tuple[Tuple[str, ...], ...] = field(default=())

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, k: int) -> Poly:
        return self.polys[k]

    @property
    def K(self) -> int:
        return len(self.polys) - 1


PolySeq = Union[PkSequence, Sequence[Poly]]


def _get(seq: PolySeq, k: int, who: str) -> Poly:
    if k < 0 or k >= len(seq):
        raise ValueError(f"{who}: sequence does not contain P_{k}")
    return seq[k]


def required_table_size(K: int) -> int:
    return 2 * K + 2


def column_ordinate(t: StirlingTable, j: int, n: int) -> Fraction:
    """Value of P_j(n) implied by T(n, j+2), for n >= j+2."""
    scale = 2 ** (j + 1) * factorial(j + 1)
    return Fraction(t_number(t, n, j + 2) * scale, falling_factorial(n, j + 2))


def pk_from_stirling(j: int, t: StirlingTable, first_node: Optional[int] = None) -> Poly:
    """Interpolate P_j through n = first_node .. first_node + j (default j+2)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    start = j + 2 if first_node is None else first_node
    if start < j + 2:
        raise ValueError("nodes below j+2 make the falling factorial vanish")
    last = start + j
    if t.max_n < last:
        raise ValueError(f"P_{j} needs a table with max_n >= {last}, got {t.max_n}")
    p = interpolate([(n, column_ordinate(t, j, n)) for n in range(start, last + 1)])
    if p.degree != j or p.leading != 1:
        raise PkConsistencyError(f"interpolated P_{j} is not monic of degree {j}: {p.to_text('n')}")
    return p


def pk_even_via_eq9(m: int, seq: PolySeq) -> Poly:
    """P_{2m} = (2m+1) n P_{2m-1} + sum_k (-2)^k w(m,k) n^(k+1) P_{2m-k-1}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    who = "pk_even_via_eq9"
    out = (2 * m + 1) * N * _get(seq, 2 * m - 1, who)
    for k in range(1, m + 1):
        w = (-2) ** k * recursion_weight(m, k)
        out += _get(seq, 2 * m - k - 1, who).mul_by_power(k + 1).scale(w)
    return out


def pk_next_via_eq11(
    m: int,
    seq: PolySeq,
    cache: BernoulliCache = _default_cache,
    sign: int = EQ11_SIGN,
) -> Poly:
    """P_{m+1} from P_0..P_m and the coefficients of B_{m+2}(x).

    ``sign=+1`` is the formula exactly as printed; ``sign=-1`` flips the
    ``2 n B_{m+1}(0)`` term, which is the variant that matches the oracle.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if m < 1:
        raise ValueError("recursion is only valid for m >= 1; P_0 and P_1 are base cases")
    who = "pk_next_via_eq11"
    bpoly = cache.polynomial(m + 2)
    acc = Poly()
    for k in range(1, m // 2 + 1):
        c = bpoly.coefficient(m + 2 - 2 * k)
        acc += _get(seq, m + 1 - 2 * k, who).scale(4 ** k * c)
    out = N * _get(seq, m, who) - (N * acc).scale(Fraction(1, m + 2))
    inhom = Poly([Fraction(4, m + 2) * cache.number(m + 2), -sign * 2 * cache.number(m + 1)])
    return out - inhom.scale(2 ** m)


def check_eq8(m: int, seq: PolySeq, cache: BernoulliCache = _default_cache) -> bool:
    """P_{2m-1}(0) == -(4^m / 2m) B_{2m}."""
    lhs, rhs = eq8_sides(m, seq, cache)
    return lhs == rhs


def eq8_sides(m: int, seq: PolySeq, cache: BernoulliCache = _default_cache) -> Tuple[Fraction, Fraction]:
    if m < 1:
        raise ValueError("m must be >= 1")
    lhs = _get(seq, 2 * m - 1, "check_eq8")(0)
    rhs = -Fraction(4 ** m, 2 * m) * cache.number(2 * m)
    return lhs, rhs


def reconstruct_t(n: int, k: int, seq: PolySeq) -> int:
    """Rebuild T(n, k) from P_{k-2}; raises if the value is not an integer."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return 1
    p = _get(seq, k - 2, "reconstruct_t")
    val = Fraction(falling_factorial(n, k), 2 ** (k - 1) * factorial(k - 1)) * p(n)
    if val.denominator != 1:
        raise PkConsistencyError(f"T({n},{k}) reconstructed as non-integer {val}")
    return val.numerator


def _recursion_sequence(K: int, cache: BernoulliCache, sign: int) -> Tuple[List[Poly], List[str]]:
    polys = [P0, P1][: K + 1]
    prov = ["base", "base"][: K + 1]
    for k in range(2, K + 1):
        if k % 2 == 0:
            polys.append(pk_even_via_eq9(k // 2, polys))
            prov.append("eq9")
        else:
            polys.append(pk_next_via_eq11(k - 1, polys, cache, sign))
            prov.append("eq11")
    return polys, prov


def build_pk_sequence(
    K: int,
    method: str = "interp",
    table: Optional[StirlingTable] = None,
    cache: BernoulliCache = _default_cache,
    sign: int = EQ11_SIGN,
) -> PkSequence:
    """P_0..P_K by the chosen method.

    ``recursion`` chains eq9 (even k) and eq11 (odd k) from the base cases.
    ``cross-check-all`` interpolates every P_k, then recomputes each k >= 2
    with eq9 (even k) and eq11 from oracle inputs and also compares the full
    recursion chain; any disagreement raises :class:`CrossCheckError`.
    """
    if K < 0:
        raise ValueError("K must be >= 0")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")

    if method == "recursion":
        polys, prov = _recursion_sequence(K, cache, sign)
        for k, p in enumerate(polys):
            if p.degree != k or p.leading != 1:
                raise PkConsistencyError(f"{prov[k]} produced non-monic P_{k}: {p.to_text('n')}")
        return PkSequence(tuple(polys), tuple(prov), tuple((m,) for m in prov))

    if table is None or table.max_n < required_table_size(K):
        table = build_stirling_table(required_table_size(K))
    oracle = [pk_from_stirling(j, table) for j in range(K + 1)]
    if method == "interp":
        return PkSequence(tuple(oracle), ("interp",) * (K + 1), tuple(("interp",) for _ in oracle))

    verified: List[Tuple[str, ...]] = []
    for k, want in enumerate(oracle):
        checks: Dict[str, Poly] = {}
        if k <= 1:
            checks["base"] = (P0, P1)[k]
        if k >= 2 and k % 2 == 0:
            checks["eq9"] = pk_even_via_eq9(k // 2, oracle)
        if k >= 2:
            checks["eq11"] = pk_next_via_eq11(k - 1, oracle, cache, sign)
        for name, got in checks.items():
            if got != want:
                raise CrossCheckError(k, "interp", name, want, got)
        verified.append(("interp",) + tuple(checks))
    chain, prov = _recursion_sequence(K, cache, sign)
    for k, (got, want) in enumerate(zip(chain, oracle)):
        if got != want:
            raise CrossCheckError(k, "interp", f"recursion chain ({prov[k]})", want, got)
    return PkSequence(tuple(oracle), ("interp",) * (K + 1), tuple(verified))


@dataclass(frozen=True)
class SignResolution:
    winner: Optional[int]
    # per sign: list of m where the recursion disagreed with the oracle
    failures: Dict[int, Tuple[int, ...]]
    max_m: int

    @property
    def variant(self) -> str:
        if self.winner is None:
            return "unresolved"
        return "as-printed" if self.winner == 1 else "flipped"


def resolve_eq11_sign(
    max_m: int = 15,
    table: Optional[StirlingTable] = None,
    cache: BernoulliCache = _default_cache,
) -> SignResolution:
    """Run both signs for m = 1..max_m against interpolated P_k.

    The winner is the unique sign with no failures, or None.
    """
    K = max_m + 1
    if table is None or table.max_n < required_table_size(K):
        table = build_stirling_table(required_table_size(K))
    oracle = [pk_from_stirling(j, table) for j in range(K + 1)]
    failures = {}
    for s in (1, -1):
        failures[s] = tuple(
            m for m in range(1, max_m + 1) if pk_next_via_eq11(m, oracle, cache, s) != oracle[m + 1]
        )
    clean = [s for s in (1, -1) if not failures[s]]
    return SignResolution(clean[0] if len(clean) == 1 else None, failures, max_m)
