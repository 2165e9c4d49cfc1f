"""Exact matrix rank over F_p and over Q."""
from __future__ import annotations

from ._kernels import BACKEND, rank_bareiss, rank_mod_p

__all__ = ["rank", "rank_mod_p", "rank_bareiss", "BACKEND", "SCREEN_PRIME"]

# largest prime below 2**31; fits the compiled kernel
SCREEN_PRIME = 2147483647


def rank(rows, characteristic: int) -> int:
    """Exact rank of an integer matrix over F_p (p > 0) or Q (p = 0).

    Over Q a reduction mod a large prime is tried first: its rank never
    exceeds the rational rank, so reaching ``min(rows, cols)`` settles it.
    Otherwise fraction-free elimination decides.
    """
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if characteristic:
        if characteristic < 2147483648:
            return rank_mod_p(rows, characteristic)
        from ._pykernels import rank_mod_p as slow

        return slow(rows, characteristic)
    full = min(len(rows), len(rows[0]))
    if rank_mod_p(rows, SCREEN_PRIME) == full:
        return full
    return rank_bareiss(rows)
