"""Shared fixtures and independent oracles for the test suite.

The oracles reimplement divisibility, membership and small modular ranks
from scratch so that engine tests never check an implementation against
itself.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from relhom.monomials import MonomialIdeal, RingSpec, minimal_generators


def oracle_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def oracle_member(e, gens) -> bool:
    return any(oracle_divides(g, e) for g in gens)


def oracle_monomials(n: int, bound: int):
    return [e for e in itertools.product(range(bound + 1), repeat=n) if sum(e) <= bound]


def oracle_rank_mod_p(rows, p: int) -> int:
    mat = [list(int(v) % p for v in row) for row in rows]
    if not mat or not mat[0]:
        return 0
    m, n = len(mat), len(mat[0])
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, m) if mat[r][col] % p), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [v * inv % p for v in mat[rank]]
        for r in range(m):
            if r != rank and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(v - f * w) % p for v, w in zip(mat[r], mat[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def random_proper_ideal(rng: np.random.Generator, ring: RingSpec, max_exp: int, max_gens: int) -> MonomialIdeal:
    count = int(rng.integers(1, max_gens + 1))
    gens = []
    for _ in range(count):
        while True:
            e = tuple(int(v) for v in rng.integers(0, max_exp + 1, size=ring.n))
            if any(e):
                break
        gens.append(e)
    return minimal_generators(ring, gens)


@pytest.fixture
def ring2():
    return RingSpec(("x", "y"))


@pytest.fixture
def ring3():
    return RingSpec(("x", "y", "z"))


@pytest.fixture
def ring4():
    return RingSpec(("x1", "x2", "y1", "y2"))
