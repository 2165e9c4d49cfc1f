"""Pure-Python rank kernels (fallback when the compiled module is missing)."""
from __future__ import annotations


def rank_mod_p(rows, p):
    """Rank over F_p of an integer matrix given as a sequence of rows."""
    a = [[x % p for x in row] for row in rows]
    if not a:
        return 0
    n = len(a[0])
    m = len(a)
    rank = 0
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if a[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        inv = pow(prow[col], p - 2, p) if p > 2 else 1
        if inv != 1:
            prow = a[rank] = [(x * inv) % p for x in prow]
        for i in range(rank + 1, m):
            f = a[i][col]
            if f:
                ri = a[i]
                a[i] = [(x - f * y) % p for x, y in zip(ri, prow)]
        rank += 1
        if rank == m:
            break
    return rank


def rank_bareiss(rows):
    """Rank over Q by fraction-free (Bareiss) elimination on integers."""
    a = [list(row) for row in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if a[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][col]
        prow = a[rank]
        for i in range(rank + 1, m):
            ri = a[i]
            f = ri[col]
            # exact division is the Bareiss invariant
            a[i] = [(pv * x - f * y) // prev for x, y in zip(ri, prow)]
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank
