"""Unsigned first-kind Stirling numbers and the reindexed triangle T(n, k).

``c(n, m)`` counts permutations of n symbols with exactly m cycles and is
0-indexed. ``T(n, k) = c(n, n - k + 1)`` is 1-indexed in both arguments.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple


@dataclass(frozen=True)
class StirlingTable:
    max_n: int
    rows: Tuple[Tuple[int, ...], ...]

    def c(self, n: int, m: int) -> int:
        if not (0 <= n <= self.max_n):
            raise IndexError(f"n={n} outside table (max_n={self.max_n})")
        if not (0 <= m <= n):
            raise IndexError(f"m={m} outside 0..{n}")
        return self.rows[n][m]


def build_stirling_table(max_n: int) -> StirlingTable:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    rows: List[Tuple[int, ...]] = [(1,)]
    for n in range(max_n):
        prev = rows[-1]
        # c(n+1, m) = c(n, m-1) + n c(n, m)
        row = [n * prev[0]]
        row += [prev[m - 1] + (n * prev[m] if m <= n else 0) for m in range(1, n + 2)]
        rows.append(tuple(row))
    return StirlingTable(max_n, tuple(rows))


def signed_stirling(t: StirlingTable, n: int, m: int) -> int:
    return (-1) ** (n - m) * t.c(n, m)


def t_number(t: StirlingTable, n: int, k: int) -> int:
    if not (1 <= n <= t.max_n):
        raise IndexError(f"n={n} outside 1..{t.max_n}")
    if k < 1:
        raise IndexError("k must be >= 1")
    if k > n:
        return 0
    return (-1) ** (k - 1) * signed_stirling(t, n, n - k + 1)


def row_sum(t: StirlingTable, n: int) -> int:
    return sum(t_number(t, n, k) for k in range(1, n + 1))


def t_rows(t: StirlingTable, max_n: int | None = None) -> List[List[int]]:
    """Square array of T(n, k) for 1 <= n, k <= max_n (zeros past the diagonal)."""
    size = t.max_n if max_n is None else max_n
    return [[t_number(t, n, k) for k in range(1, size + 1)] for n in range(1, size + 1)]
