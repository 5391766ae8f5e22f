"""Identity-check suites behind ``stirpoly verify``.

Each suite returns a :class:`SuiteResult`; a failing suite carries the
first counterexample with both sides as exact values.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .bernoulli import BernoulliCache, bernoulli_odd_via_eq10
from .numeric import factorial, format_rational
from .pk import (
    EQ11_SIGN,
    PkSequence,
    build_pk_sequence,
    eq8_sides,
    pk_even_via_eq9,
    pk_next_via_eq11,
    required_table_size,
    resolve_eq11_sign,
)
from .stirling import StirlingTable, build_stirling_table, row_sum, t_number

# T(n, k) for n = 1..7 as printed, zeros past the diagonal included.
PAPER_TABLE = (
    (1, 0, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0),
    (1, 3, 2, 0, 0, 0, 0),
    (1, 6, 11, 6, 0, 0, 0),
    (1, 10, 35, 50, 24, 0, 0),
    (1, 15, 85, 225, 274, 120, 0),
    (1, 21, 175, 735, 1624, 1764, 720),
)

SUITES = ("table", "rowsums", "eq8", "eq9", "eq10", "eq11")
DEFAULT_DEPTH = {"table": 7, "rowsums": 15, "eq8": 15, "eq9": 15, "eq10": 15, "eq11": 15}


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    detail: str
    counterexample: Optional[str] = None

    def lines(self) -> List[str]:
        out = [f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.checked} checks)"]
        if self.counterexample:
            out.append(f"    first counterexample: {self.counterexample}")
        return out


class Context:
    """Shared Stirling table, Bernoulli cache and oracle sequence, grown on demand."""

    def __init__(self, eq11_sign: int = EQ11_SIGN):
        self.cache = BernoulliCache()
        self.table: Optional[StirlingTable] = None
        self.oracle: Optional[PkSequence] = None
        self.eq11_sign = eq11_sign

    def table_for(self, max_n: int) -> StirlingTable:
        if self.table is None or self.table.max_n < max_n:
            self.table = build_stirling_table(max_n)
        return self.table

    def oracle_for(self, K: int) -> PkSequence:
        if self.oracle is None or self.oracle.K < K:
            t = self.table_for(required_table_size(K))
            self.oracle = build_pk_sequence(K, "interp", table=t, cache=self.cache)
        return self.oracle


def _cycle_count(perm) -> int:
    seen, cycles = set(), 0
    for i in range(len(perm)):
        if i not in seen:
            cycles += 1
            while i not in seen:
                seen.add(i)
                i = perm[i]
    return cycles


def suite_table(depth: int, ctx: Context) -> SuiteResult:
    """Printed entries, structural invariants, and a permutation-count oracle for n <= 7."""
    t = ctx.table_for(max(depth, 1))
    checked = 0
    for n in range(1, min(depth, 7) + 1):
        for k in range(1, 8):
            got, want = t_number(t, n, k), PAPER_TABLE[n - 1][k - 1]
            checked += 1
            if got != want:
                return SuiteResult("table", False, checked, "printed T table",
                                   f"T({n},{k}) = {got}, printed {want}")
    for n in range(1, min(depth, 7) + 1):
        counts: Dict[int, int] = {}
        for perm in itertools.permutations(range(n)):
            c = _cycle_count(perm)
            counts[c] = counts.get(c, 0) + 1
        for m in range(1, n + 1):
            checked += 1
            if t.c(n, m) != counts.get(m, 0):
                return SuiteResult("table", False, checked, "cycle counts",
                                   f"c({n},{m}) = {t.c(n, m)}, permutations with {m} cycles = {counts.get(m, 0)}")
    for n in range(1, depth + 1):
        row = [t_number(t, n, k) for k in range(1, n + 1)]
        checked += 1
        if row[0] != 1 or row[-1] != factorial(n - 1) or min(row) < 0:
            return SuiteResult("table", False, checked, "T(n,1)=1, T(n,n)=(n-1)!, T>=0",
                               f"row n={n}: {row}")
    return SuiteResult("table", True, checked,
                       f"printed table (n <= {min(depth, 7)}), cycle counts, row invariants (n <= {depth})")


def suite_rowsums(depth: int, ctx: Context) -> SuiteResult:
    t = ctx.table_for(depth)
    for n in range(1, depth + 1):
        s, f = row_sum(t, n), factorial(n)
        if s != f:
            return SuiteResult("rowsums", False, n, "sum_k T(n,k) = n!", f"n={n}: sum = {s}, n! = {f}")
    return SuiteResult("rowsums", True, depth, f"sum_k T(n,k) = n! for n = 1..{depth}")


def suite_eq8(depth: int, ctx: Context) -> SuiteResult:
    seq = ctx.oracle_for(2 * depth - 1)
    for m in range(1, depth + 1):
        lhs, rhs = eq8_sides(m, seq, ctx.cache)
        if lhs != rhs:
            return SuiteResult("eq8", False, m, "P_{2m-1}(0) = -(4^m/2m) B_{2m}",
                               f"m={m}: P_{2 * m - 1}(0) = {format_rational(lhs)}, "
                               f"-(4^m/2m) B_{2 * m} = {format_rational(rhs)}")
    return SuiteResult("eq8", True, depth, f"P_{{2m-1}}(0) = -(4^m/2m) B_{{2m}} for m = 1..{depth}")


def _poly_mismatch(k: int, want, got, var: str = "n") -> str:
    j = next(i for i in range(max(len(want.coeffs), len(got.coeffs))) if want.coefficient(i) != got.coefficient(i))
    return (f"index {k}, coefficient of {var}^{j}: expected {format_rational(want.coefficient(j))}, "
            f"got {format_rational(got.coefficient(j))}")


def suite_eq9(depth: int, ctx: Context) -> SuiteResult:
    seq = ctx.oracle_for(2 * depth)
    for m in range(1, depth + 1):
        got = pk_even_via_eq9(m, seq)
        if got != seq[2 * m]:
            return SuiteResult("eq9", False, m, "even-index recursion vs interpolation",
                               _poly_mismatch(2 * m, seq[2 * m], got))
    return SuiteResult("eq9", True, depth, f"P_{{2m}} recursion matches interpolation for m = 1..{depth}")


def suite_eq10(depth: int, ctx: Context) -> SuiteResult:
    for m in range(1, depth + 1):
        got, want = bernoulli_odd_via_eq10(m, ctx.cache), ctx.cache.polynomial(2 * m + 1)
        if got != want:
            return SuiteResult("eq10", False, m, "odd Bernoulli recursion vs binomial formula",
                               _poly_mismatch(2 * m + 1, want, got, "x"))
    return SuiteResult("eq10", True, depth, f"B_{{2m+1}}(x) recursion matches binomial formula for m = 1..{depth}")


def suite_eq11(depth: int, ctx: Context) -> SuiteResult:
    t = ctx.table_for(required_table_size(depth + 1))
    res = resolve_eq11_sign(depth, table=t, cache=ctx.cache)
    summary = "; ".join(
        f"sign {s:+d} fails at m = {list(res.failures[s]) or 'none'}" for s in (1, -1)
    )
    detail = f"sign resolution: winner {res.variant}"
    if res.winner is not None:
        detail += f" (sign {res.winner:+d})"
    detail += f"; {summary}"
    seq = ctx.oracle_for(depth + 1)
    for m in range(1, depth + 1):
        got = pk_next_via_eq11(m, seq, ctx.cache, ctx.eq11_sign)
        if got != seq[m + 1]:
            return SuiteResult("eq11", False, m, detail + f"; checked sign {ctx.eq11_sign:+d}",
                               _poly_mismatch(m + 1, seq[m + 1], got))
    if res.winner != ctx.eq11_sign:
        return SuiteResult("eq11", False, depth, detail, "sign resolution is not unique")
    return SuiteResult("eq11", True, 2 * depth, detail + f"; checked sign {ctx.eq11_sign:+d}")


SUITE_FUNCS: Dict[str, Callable[[int, Context], SuiteResult]] = {
    "table": suite_table,
    "rowsums": suite_rowsums,
    "eq8": suite_eq8,
    "eq9": suite_eq9,
    "eq10": suite_eq10,
    "eq11": suite_eq11,
}


def run_suites(suite: str, depth: Optional[int] = None, eq11_sign: int = EQ11_SIGN) -> List[SuiteResult]:
    names = SUITES if suite == "all" else (suite,)
    if any(n not in SUITE_FUNCS for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    ctx = Context(eq11_sign)
    return [SUITE_FUNCS[n](depth if depth is not None else DEFAULT_DEPTH[n], ctx) for n in names]


def format_report(results: List[SuiteResult]) -> str:
    lines = [line for r in results for line in r.lines()]
    ok = all(r.passed for r in results)
    lines.append(f"{'ALL PASS' if ok else 'FAILED'}: {sum(r.passed for r in results)}/{len(results)} suites")
    return "\n".join(lines) + "\n"
