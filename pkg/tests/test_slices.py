"""Degreewise Ext / local-cohomology slices against an independent oracle.

The oracle rebuilds each per-degree complex from the definitions (its own
activity rules, its own signs, its own modular rank) and must agree with
the engine slice by slice.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from relhom.monomials import RingSpec, parse_ideal, support, unit_ideal, zero_ideal
from relhom.slices import (
    DegreeBox,
    cech_piece,
    clear_slice_caches,
    ext_profile,
    ext_slice,
    ext_table,
    ext_vanishes,
    ext_vanishes_below,
    lc_profile,
    lc_table,
    local_cohomology_slice,
)

from conftest import oracle_member, oracle_rank_mod_p, random_proper_ideal

C4 = "x1*x2, x2*y1, y1*y2, y2*x1"


# --- independent per-degree oracle -----------------------------------------

def _subsets(r):
    return [frozenset(c) for k in range(r + 1) for c in itertools.combinations(range(r), k)]


def _sign(T, t):
    return -1 if len([s for s in T if s < t]) % 2 else 1


def _complex_dims(active_subsets, r, p):
    """Cohomology dims of the incidence complex on the active subsets."""
    levels = [[T for T in active_subsets if len(T) == k] for k in range(r + 1)]
    ranks = []
    for k in range(r):
        rows = {T: i for i, T in enumerate(levels[k + 1])}
        mat = [[0] * len(levels[k]) for _ in levels[k + 1]]
        for col, T in enumerate(levels[k]):
            for t in range(r):
                if t in T:
                    continue
                bigger = T | {t}
                if bigger in rows:
                    mat[rows[bigger]][col] = _sign(T, t)
        # the composite of consecutive differentials must vanish
        ranks.append((mat, oracle_rank_mod_p(mat, p)))
    dims = []
    for k in range(r + 1):
        outgoing = ranks[k][1] if k < r else 0
        incoming = ranks[k - 1][1] if k > 0 else 0
        dims.append(len(levels[k]) - outgoing - incoming)
    for k in range(r - 1):
        low, high = ranks[k][0], ranks[k + 1][0]
        if low and high:
            prod = np.asarray(high) @ np.asarray(low)
            assert not (prod % p).any(), "oracle: consecutive differentials do not compose to zero"
    return dims


def oracle_ext_dims(J, I, b, p):
    r = len(J.gens)
    n = J.ring.n

    def alpha(T):
        return tuple(max((J.gens[t][j] for t in T), default=0) for j in range(n))

    active = []
    for T in _subsets(r):
        c = tuple(x + y for x, y in zip(b, alpha(T)))
        if all(v >= 0 for v in c) and not oracle_member(c, I.gens):
            active.append(T)
    return _complex_dims(active, r, p)


def oracle_lc_dims(a, I, b, p):
    r = len(a.gens)
    n = a.ring.n
    active = []
    for T in _subsets(r):
        inverted = set().union(*(support(a.gens[t]) for t in T)) if T else set()
        outside = [j for j in range(n) if j not in inverted]
        if any(b[j] < 0 for j in outside):
            continue
        erased = [tuple(g[j] for j in outside) for g in I.gens]
        restricted = tuple(b[j] for j in outside)
        if not oracle_member(restricted, erased):
            active.append(T)
    return _complex_dims(active, r, p)


# --- fixtures ---------------------------------------------------------------

def test_hom_slice_one_variable():
    ring = RingSpec(("x",))
    J = parse_ideal(ring, "x")
    I = parse_ideal(ring, "x^2")
    assert ext_slice(J, I, 0, (1,)) == 1
    assert ext_slice(J, I, 0, (0,)) == 0
    assert ext_slice(J, I, 0, (2,)) == 0
    assert ext_slice(J, I, 1, (-1,)) == 1


def test_ext_profile_of_irrelevant_power_ideal(ring2):
    # three generators whose radical is the whole irrelevant ideal:
    # the only surviving index over the entire box is 2
    a = parse_ideal(ring2, "x^2, y^3, x*y")
    assert ext_profile(a, zero_ideal(ring2)) == frozenset({2})
    for i in (0, 1, 3):
        assert ext_vanishes(a, zero_ideal(ring2), i)


def test_ext_profile_maximal_ideal_on_hypersurface(ring2):
    assert ext_profile(parse_ideal(ring2, "x, y"), parse_ideal(ring2, "x*y")) == frozenset({1, 2})


def test_ext_profile_principal_on_its_own_quotient(ring2):
    assert ext_profile(parse_ideal(ring2, "x"), parse_ideal(ring2, "x")) == frozenset({0, 1})


def test_ext_box_violation(ring2):
    J = parse_ideal(ring2, "x")
    with pytest.raises(ValueError):
        ext_slice(J, parse_ideal(ring2, "x^2"), 0, (9, 0))


def test_char_zero_rejected():
    ring = RingSpec(("x",), char=0)
    with pytest.raises(ValueError):
        ext_profile(parse_ideal(ring, "x"), zero_ideal(ring))


def test_unit_ideals_rejected(ring2):
    with pytest.raises(ValueError):
        ext_profile(unit_ideal(ring2), zero_ideal(ring2))
    with pytest.raises(ValueError):
        lc_profile(parse_ideal(ring2, "x"), unit_ideal(ring2))


def test_cech_piece_localization_direction(ring2):
    I = parse_ideal(ring2, "x*y")
    assert cech_piece(I, [(1, 0)], (-3, 0)) == 1
    assert cech_piece(I, [(1, 0)], (-3, 1)) == 0


def test_cech_piece_empty_subset_is_plain_membership(ring2):
    I = parse_ideal(ring2, "x^2")
    assert cech_piece(I, [], (1, 5)) == 1
    assert cech_piece(I, [], (2, 0)) == 0
    assert cech_piece(I, [], (-1, 0)) == 0


def test_cech_piece_unit_ideal_is_zero(ring2):
    assert cech_piece(unit_ideal(ring2), [(1, 0)], (0, 0)) == 0


def test_lc_profiles_on_fixtures(ring4):
    edge = parse_ideal(ring4, C4)
    assert lc_profile(parse_ideal(ring4, "y1, y2"), edge) == frozenset({1})
    assert lc_profile(edge, zero_ideal(ring4)) == frozenset({2, 3})
    assert lc_profile(zero_ideal(ring4), edge) == frozenset({0})


def test_lc_profile_of_non_radical_principal_like_ideal(ring2):
    # radical is principal, so only the first index survives
    assert lc_profile(parse_ideal(ring2, "x*y, x^2"), zero_ideal(ring2)) == frozenset({1})


def test_top_local_cohomology_slice_of_edge_quotient(ring4):
    maximal = parse_ideal(ring4, "x1, x2, y1, y2")
    edge = parse_ideal(ring4, C4)
    assert local_cohomology_slice(maximal, edge, 1, (0, 0, 0, 0)) == 1
    table = lc_table(maximal, edge)
    assert table.total(1) == 1
    assert table.hilbert(1) == {(0, 0, 0, 0): 1}


def test_ext_vanishes_below_matches_profile(ring2):
    a = parse_ideal(ring2, "x^2, y^3, x*y")
    S = zero_ideal(ring2)
    assert ext_vanishes_below(a, S, 2)
    assert not ext_vanishes_below(a, S, 3)


# --- oracle comparison and properties ---------------------------------------

def test_ext_slices_match_oracle(ring2):
    rng = np.random.default_rng(37)
    p = ring2.char
    for _ in range(6):
        J = random_proper_ideal(rng, ring2, 2, 3)
        I = random_proper_ideal(rng, ring2, 2, 3)
        box = DegreeBox.for_ideals(J, I)
        table = ext_table(J, I)
        for b in itertools.product(range(-box.rho[0], box.rho[0] + 1), range(-box.rho[1], box.rho[1] + 1)):
            expected = oracle_ext_dims(J, I, b, p)
            for i, dim in enumerate(expected):
                assert table.dim_at(i, b) == dim


def test_lc_slices_match_oracle(ring2):
    rng = np.random.default_rng(41)
    p = ring2.char
    for _ in range(6):
        a = random_proper_ideal(rng, ring2, 2, 3)
        I = random_proper_ideal(rng, ring2, 2, 3)
        box = DegreeBox.for_ideals(a, I)
        for b in itertools.product(range(-box.rho[0], box.rho[0] + 1), range(-box.rho[1], box.rho[1] + 1)):
            expected = oracle_lc_dims(a, I, b, p)
            for i, dim in enumerate(expected):
                assert local_cohomology_slice(a, I, i, b) == dim


def test_box_enlargement_never_changes_profiles(ring4):
    rng = np.random.default_rng(43)
    for _ in range(8):
        a = random_proper_ideal(rng, ring4, 3, 4)
        I = random_proper_ideal(rng, ring4, 3, 4)
        assert ext_profile(a, I, pad=0) == ext_profile(a, I, pad=2)
        assert lc_profile(a, I, pad=0) == lc_profile(a, I, pad=2)


def test_resolution_independence_of_grade(ring4):
    rng = np.random.default_rng(47)
    for _ in range(8):
        a = random_proper_ideal(rng, ring4, 2, 4)
        I = random_proper_ideal(rng, ring4, 2, 4)
        assert min(ext_profile(a, I)) == min(lc_profile(a, I))


def test_ext_vanishes_below_agrees_with_profile_on_random(ring3):
    rng = np.random.default_rng(53)
    for _ in range(8):
        J = random_proper_ideal(rng, ring3, 2, 4)
        I = random_proper_ideal(rng, ring3, 2, 4)
        profile = ext_profile(J, I)
        for k in range(len(J.gens) + 2):
            assert ext_vanishes_below(J, I, k) == all(i >= k for i in profile)


def test_lc_slices_outside_box_match_oracle(ring2):
    # slice values are exact at any degree; the box only bounds module vanishing
    rng = np.random.default_rng(57)
    p = ring2.char
    for _ in range(4):
        a = random_proper_ideal(rng, ring2, 2, 3)
        I = random_proper_ideal(rng, ring2, 2, 3)
        for b in ((-7, 0), (0, -9), (6, -1), (-8, 5), (9, 9)):
            expected = oracle_lc_dims(a, I, b, p)
            for i, dim in enumerate(expected):
                assert local_cohomology_slice(a, I, i, b) == dim


def test_slice_dimensions_are_nonnegative(ring4):
    rng = np.random.default_rng(51)
    for _ in range(5):
        a = random_proper_ideal(rng, ring4, 2, 4)
        I = random_proper_ideal(rng, ring4, 2, 4)
        assert (ext_table(a, I).dims >= 0).all()
        assert (lc_table(a, I).dims >= 0).all()


def test_degree_box_bounds(ring2):
    box = DegreeBox.for_ideals(parse_ideal(ring2, "x^3"), parse_ideal(ring2, "y^2"))
    assert box.rho == (4, 3)
    assert box.contains((4, -3))
    assert not box.contains((5, 0))
    with pytest.raises(ValueError):
        DegreeBox((0, 1))


def test_oversized_scan_fails_fast(ring2):
    a = parse_ideal(ring2, "x, y")
    with pytest.raises(ValueError, match="too large"):
        ext_profile(a, zero_ideal(ring2), pad=20_000)


def test_concurrent_slice_evaluation_matches_serial(ring4):
    a = parse_ideal(ring4, C4)
    S = zero_ideal(ring4)
    degrees = [(-1, -1, -1, -1), (0, 0, 0, 0), (-2, 0, -1, 0), (-1, -2, -1, -2)]
    tasks = [(i, b) for i in range(5) for b in degrees]
    serial = [local_cohomology_slice(a, S, i, b) for i, b in tasks]
    clear_slice_caches()
    with ThreadPoolExecutor(max_workers=4) as pool:
        parallel = list(pool.map(lambda ib: local_cohomology_slice(a, S, ib[0], ib[1]), tasks))
    assert serial == parallel
