"""Binomial calculus for Hilbert functions.

Macaulay i-binomial expansions, the offset operator ``(n_(i))_a^b`` and the
three bound functions built on it: Macaulay growth, Green restriction and
the known lower bound on ``h_2`` of a Gorenstein h-vector.

All arithmetic uses Python integers, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

__all__ = [
    "BinomialExpansion",
    "OffsetPair",
    "binom",
    "expand",
    "eval_offset",
    "macaulay_bound",
    "green_bound",
    "mnz_h2_bound",
    "inverse_macaulay",
]


def binom(n: int, k: int) -> int:
    """C(n, k) with the clamping convention C(m, q) = 0 when m < q or q < 0."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class BinomialExpansion:
    """``n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)``.

    ``terms`` holds ``(n_j, j)`` pairs with ``j`` descending from
    ``top_degree``.
    """

    top_degree: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.top_degree < 1:
            raise ValueError("top_degree must be positive")
        if not self.terms:
            raise ValueError("an expansion needs at least one term")
        expected = self.top_degree
        prev_top = None
        for top, low in self.terms:
            if low != expected:
                raise ValueError(f"lower indices must be consecutive from {self.top_degree}")
            if low < 1 or top < low:
                raise ValueError(f"invalid term C({top},{low})")
            if prev_top is not None and top >= prev_top:
                raise ValueError("upper indices must strictly decrease")
            prev_top = top
            expected -= 1

    @property
    def value(self) -> int:
        return sum(comb(top, low) for top, low in self.terms)

    def __str__(self) -> str:
        return " + ".join(f"C({top},{low})" for top, low in self.terms)


@dataclass(frozen=True)
class OffsetPair:
    """``a`` shifts the lower indices, ``b`` the upper ones."""

    a: int
    b: int


def _largest_top(n: int, i: int) -> int:
    # largest t with C(t, i) <= n; C(t, i) is increasing in t for t >= i
    lo, hi = i, i + 1
    while comb(hi, i) <= n:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, i) <= n:
            lo = mid
        else:
            hi = mid
    return lo


@lru_cache(maxsize=65536)
def expand(n: int, i: int) -> BinomialExpansion:
    """Greedy i-binomial expansion of ``n``.

    >>> str(expand(14, 4))
    'C(5,4) + C(4,3) + C(3,2) + C(2,1)'
    """
    if n < 1 or i < 1:
        raise ValueError(f"expand needs n >= 1 and i >= 1, got n={n}, i={i}")
    terms = []
    rest, j = n, i
    while rest > 0:
        top = _largest_top(rest, j)
        terms.append((top, j))
        rest -= comb(top, j)
        j -= 1
    return BinomialExpansion(i, tuple(terms))


def eval_offset(e: BinomialExpansion, o: OffsetPair) -> int:
    return sum(binom(top + o.b, low + o.a) for top, low in e.terms)


def macaulay_bound(n: int, d: int) -> int:
    """Largest possible ``h_{d+1}`` given ``h_d = n``: ``((n)_(d))^1_1``.

    ``n = 0`` maps to 0.
    """
    if n == 0:
        return 0
    return eval_offset(expand(n, d), OffsetPair(1, 1))


def green_bound(n: int, d: int) -> int:
    """Upper bound ``((n)_(d))^{-1}_0`` on the degree-d value after cutting by a general linear form."""
    if n == 0:
        return 0
    return eval_offset(expand(n, d), OffsetPair(0, -1))


def mnz_h2_bound(r: int, e: int) -> int:
    """Lower bound on ``h_2`` for a Gorenstein h-vector of codimension r, socle degree e."""
    if r < 1 or e < 2:
        raise ValueError(f"mnz_h2_bound needs r >= 1 and e >= 2, got r={r}, e={e}")
    x = expand(r, e - 1)
    return eval_offset(x, OffsetPair(-1, -1)) + eval_offset(x, OffsetPair(-(e - 3), -(e - 2)))


def inverse_macaulay(y: int, d: int) -> int:
    """Smallest ``x >= 0`` with ``macaulay_bound(x, d) >= y``."""
    if y <= 0:
        return 0
    # macaulay_bound(x, d) >= x, so x = y always works
    lo, hi = 0, y
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if macaulay_bound(mid, d) >= y:
            hi = mid
        else:
            lo = mid
    return hi
