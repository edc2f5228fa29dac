"""Exact rank computation over prime fields."""

from __future__ import annotations

import numpy as np

__all__ = ["rank_mod_p"]


def rank_mod_p(matrix, p: int) -> int:
    """Rank of an integer matrix over GF(p) by dense Gaussian elimination.

    Entries here are tiny (signs), matrices are at most a few hundred rows,
    so the dense row-reduction below is exact and fast in int64.
    """
    if p < 2:
        raise ValueError("modulus must be a prime")
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    a %= p
    m, n = a.shape
    if m == 0 or n == 0:
        return 0
    rank = 0
    for col in range(n):
        pivots = np.nonzero(a[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + int(pivots[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = a[rank] * inv % p
        below = np.nonzero(a[rank + 1:, col])[0] + rank + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, col], a[rank])) % p
        rank += 1
        if rank == m:
            break
    return rank
