"""Betti numbers, projective dimension and depth from the subset-lcm complex."""

import numpy as np
import pytest

from relhom.monomials import RingSpec, parse_ideal, unit_ideal, zero_ideal
from relhom.taylor import (
    betti_numbers,
    depth_quotient,
    differential_matrices_over_field,
    pd_quotient,
)

from conftest import random_proper_ideal

C4 = "x1*x2, x2*y1, y1*y2, y2*x1"


def test_koszul_two_variables(ring2):
    assert betti_numbers(parse_ideal(ring2, "x, y")) == (1, 2, 1)


def test_edge_ideal_of_four_cycle(ring4):
    edge = parse_ideal(ring4, C4)
    assert betti_numbers(edge) == (1, 4, 4, 1, 0)
    assert pd_quotient(edge) == 3
    assert depth_quotient(edge) == 1


def test_mixed_two_generator_ideal(ring2):
    ideal = parse_ideal(ring2, "x*y, x^2")
    assert betti_numbers(ideal) == (1, 2, 1)
    assert pd_quotient(ideal) == 2


def test_three_generator_primary_ideal(ring2):
    # <x^2, x*y, y^3> resolves with two first syzygies and nothing beyond
    assert betti_numbers(parse_ideal(ring2, "x^2, y^3, x*y")) == (1, 3, 2, 0)


def test_coprime_pure_powers_are_koszul():
    ring = RingSpec(("x1", "x2", "x3", "x4"))
    assert betti_numbers(parse_ideal(ring, "x1^2, x2^3")) == (1, 2, 1)
    assert pd_quotient(parse_ideal(ring, "x1^2, x2^3")) == 2


def test_zero_ideal(ring2):
    assert betti_numbers(zero_ideal(ring2)) == (1,)
    assert pd_quotient(zero_ideal(ring2)) == 0
    assert depth_quotient(zero_ideal(ring2)) == 2


def test_unit_ideal_rejected(ring2):
    with pytest.raises(ValueError):
        betti_numbers(unit_ideal(ring2))


def test_char_zero_rejected():
    ring = RingSpec(("x", "y"), char=0)
    with pytest.raises(ValueError):
        betti_numbers(parse_ideal(ring, "x*y"))


def test_first_betti_numbers_and_rank_on_random(ring3):
    rng = np.random.default_rng(29)
    for _ in range(15):
        ideal = random_proper_ideal(rng, ring3, 3, 5)
        betti = betti_numbers(ideal)
        assert betti[0] == 1
        if len(betti) > 1:
            assert betti[1] == ideal.mu
        # S/I has rank 0 over S exactly when I is nonzero
        alternating = sum((-1) ** i * b for i, b in enumerate(betti))
        assert alternating == (0 if not ideal.is_zero else 1)
        assert all(b >= 0 for b in betti)


def test_differentials_compose_to_zero(ring4):
    rng = np.random.default_rng(31)
    p = ring4.char
    for _ in range(10):
        ideal = random_proper_ideal(rng, ring4, 3, 5)
        mats = differential_matrices_over_field(ideal)
        for d_low, d_high in zip(mats, mats[1:]):
            assert not ((d_low @ d_high) % p).any()


def test_subset_lcms_shape_and_monotonicity(ring3):
    from relhom.taylor import subset_lcms

    rng = np.random.default_rng(97)
    for _ in range(5):
        ideal = random_proper_ideal(rng, ring3, 3, 4)
        alpha = subset_lcms(ideal.gens, 3)
        assert not alpha[0].any()  # empty subset has degree zero
        for mask in range(1, 1 << ideal.mu):
            sub = mask & (mask - 1)  # drop one element
            assert (alpha[mask] >= alpha[sub]).all()
