from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greenhv.macaulay import (
    BinomialExpansion,
    OffsetPair,
    binom,
    eval_offset,
    expand,
    green_bound,
    inverse_macaulay,
    macaulay_bound,
    mnz_h2_bound,
)


def pascal(n: int, k: int) -> int:
    # independent oracle: Pascal's triangle row by row
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k] if 0 <= k < len(row) else 0


def test_binom_against_pascal():
    for n in range(0, 61):
        for k in range(-2, n + 3):
            assert binom(n, k) == pascal(n, k)
    assert binom(60, 30) == 118264581564861424


def test_binom_clamps():
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 2) == 0


def test_expansion_reconstructs_small_range():
    for d in range(1, 9):
        for n in range(1, 10_001, 7 if d > 4 else 1):
            x = expand(n, d)
            assert x.value == n
            assert x.top_degree == d


def brute_expansions(n: int, d: int):
    """All strictly decreasing representations n = sum C(a_j, j), j = d down to some k >= 1."""
    found = []

    def rec(level, remaining, upper, acc):
        if remaining == 0:
            found.append(tuple(acc))
            return
        if level == 0:
            return
        for a in range(level, upper):
            v = binom(a, level)
            if v > remaining:
                break
            rec(level - 1, remaining - v, a, acc + [(a, level)])

    rec(d, n, n + d + 1, [])
    return found


def test_expansion_unique_by_exhaustive_search():
    for d in range(1, 6):
        for n in range(1, 301):
            reps = brute_expansions(n, d)
            assert reps == [expand(n, d).terms], (n, d)


@given(st.integers(1, 10**12), st.integers(1, 12))
@settings(max_examples=300, deadline=None)
def test_expansion_shape(n, d):
    x = expand(n, d)
    assert x.value == n
    tops = [a for a, _ in x.terms]
    levels = [j for _, j in x.terms]
    assert levels == list(range(d, d - len(levels), -1))
    assert all(a >= j for a, j in x.terms)
    assert all(t1 > t2 for t1, t2 in zip(tops, tops[1:]))


def test_expansion_str():
    assert str(expand(9, 2)) == "C(4,2) + C(3,1)"
    assert str(expand(15, 4)) == "C(6,4)"
    assert str(expand(14, 4)) == "C(5,4) + C(4,3) + C(3,2) + C(2,1)"


def test_expansion_rejects_bad_input():
    with pytest.raises(ValueError):
        expand(0, 3)
    with pytest.raises(ValueError):
        expand(5, 0)
    with pytest.raises(ValueError):
        BinomialExpansion(2, ((3, 2), (3, 1)))


def test_named_values():
    assert green_bound(14, 4) == 4
    assert green_bound(18, 5) == 4
    assert mnz_h2_bound(10, 4) == 9
    assert macaulay_bound(9, 2) == 16
    assert macaulay_bound(0, 3) == 0
    assert green_bound(0, 3) == 0


def test_eval_offset_definition():
    x = expand(9, 2)  # C(4,2) + C(3,1)
    assert eval_offset(x, OffsetPair(1, 1)) == binom(5, 3) + binom(4, 2)
    assert eval_offset(x, OffsetPair(-1, 0)) == binom(3, 2) + binom(2, 1)
    # clamping: C(m, q) = 0 when q < 0
    assert eval_offset(expand(1, 1), OffsetPair(0, -2)) == 0


def test_macaulay_bound_on_full_degree_pieces():
    # C(r-1+d, d) monomials of degree d in r variables grow to C(r+d, d+1)
    for r in range(1, 8):
        for d in range(1, 7):
            assert macaulay_bound(binom(r - 1 + d, d), d) == binom(r + d, d + 1)


@given(st.integers(0, 5000), st.integers(1, 7))
@settings(max_examples=300, deadline=None)
def test_bounds_monotone(n, d):
    assert macaulay_bound(n, d) <= macaulay_bound(n + 1, d)
    assert green_bound(n, d) <= green_bound(n + 1, d)
    assert green_bound(n, d) <= n
    assert macaulay_bound(n, d) >= n


@given(st.integers(0, 5000), st.integers(1, 7))
@settings(max_examples=300, deadline=None)
def test_inverse_macaulay(y, d):
    x = inverse_macaulay(y, d)
    assert macaulay_bound(x, d) >= y
    assert x == 0 or macaulay_bound(x - 1, d) < y


def test_mnz_family_and_bad_input():
    for m in range(2, 9):
        assert mnz_h2_bound(binom(m + 3, 3), 4) == (m + 1) ** 2
    with pytest.raises(ValueError):
        mnz_h2_bound(0, 4)
    with pytest.raises(ValueError):
        mnz_h2_bound(5, 1)


def test_green_bound_top_values():
    for e in range(3, 13):
        assert green_bound(e, e - 1) == 1


def test_expand_cache_is_consistent():
    pairs = list(itertools.product(range(1, 50), range(1, 5)))
    first = [expand(n, d) for n, d in pairs]
    assert first == [expand(n, d) for n, d in pairs]
