import itertools
import math

import pytest

from stirpoly import build_stirling_table, row_sum, signed_stirling, t_number
from stirpoly.verify import PAPER_TABLE


def _cycles(perm):
    seen, c = set(), 0
    for i in range(len(perm)):
        if i not in seen:
            c += 1
            while i not in seen:
                seen.add(i)
                i = perm[i]
    return c


def test_matches_permutation_enumeration():
    t = build_stirling_table(7)
    for n in range(0, 8):
        counts = [0] * (n + 1)
        for p in itertools.permutations(range(n)):
            counts[_cycles(p)] += 1
        assert list(t.rows[n]) == counts


def test_examples(table):
    assert table.c(4, 2) == 11
    assert table.c(6, 1) == 120
    assert all(table.c(n, n) == 1 for n in range(61))
    assert signed_stirling(table, 4, 2) == 11
    assert signed_stirling(table, 3, 2) == -3
    assert t_number(table, 7, 5) == 1624
    assert t_number(table, 3, 5) == 0
    assert t_number(table, 5, 3) == 35
    assert row_sum(table, 1) == 1
    assert row_sum(table, 3) == 6
    assert row_sum(table, 4) == 24


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("k", range(1, 8))
def test_printed_table(table, n, k):
    assert t_number(table, n, k) == PAPER_TABLE[n - 1][k - 1]


def test_recurrence_and_boundaries(table):
    assert table.c(0, 0) == 1
    for n in range(1, table.max_n):
        assert table.c(n, 0) == 0
        for m in range(1, n + 2):
            below = table.c(n, m) if m <= n else 0
            assert table.c(n + 1, m) == table.c(n, m - 1) + n * below


def test_t_invariants(table):
    for n in range(1, table.max_n + 1):
        assert t_number(table, n, 1) == 1
        assert t_number(table, n, n) == math.factorial(n - 1)
        assert all(t_number(table, n, k) >= 0 for k in range(1, n + 2))
        assert row_sum(table, n) == math.factorial(n)


def test_range_errors(table):
    with pytest.raises(IndexError):
        t_number(table, 61, 1)
    with pytest.raises(IndexError):
        t_number(table, 0, 1)
    with pytest.raises(IndexError):
        signed_stirling(table, 3, 4)
    with pytest.raises(ValueError):
        build_stirling_table(0)


def test_large_table_is_exact():
    t = build_stirling_table(300)
    assert row_sum(t, 300) == math.factorial(300)
