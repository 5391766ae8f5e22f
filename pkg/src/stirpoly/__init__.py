"""Exact Stirling numbers, Bernoulli polynomials, and the Bernoulli-like P_k(n)."""
from .bernoulli import BernoulliCache, bernoulli_number, bernoulli_odd_via_eq10, bernoulli_polynomial
from .numeric import binomial, factorial, falling_factorial, format_rational, parse_rational, rat
from .pk import (
    EQ11_SIGN,
    CrossCheckError,
    PkConsistencyError,
    PkSequence,
    build_pk_sequence,
    check_eq8,
    pk_even_via_eq9,
    pk_from_stirling,
    pk_next_via_eq11,
    reconstruct_t,
    resolve_eq11_sign,
)
from .polynomial import Poly, interpolate, poly_coefficient, poly_derivative, poly_eval
from .stirling import StirlingTable, build_stirling_table, row_sum, signed_stirling, t_number

__version__ = "0.1.0"
