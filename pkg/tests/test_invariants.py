"""grade / cd / relative injective dimension / parameter systems."""

import numpy as np
import pytest

from relhom.invariants import (
    SOP_DEGENERATE_ZERO_LENGTH,
    SOP_FOUND,
    SOP_NONE_AMONG_MONOMIALS,
    EngineDisagreementError,
    a_id,
    cd,
    cd_by_support,
    grade,
    grade_by_localization,
    invariant_record,
    is_monomial_regular_sequence,
    mu,
    sop_search,
    sop_witness_by_support,
)
from relhom.monomials import RingSpec, parse_ideal, unit_ideal, zero_ideal

from conftest import random_proper_ideal

C4 = "x1*x2, x2*y1, y1*y2, y2*x1"


@pytest.fixture
def edge(ring4):
    return parse_ideal(ring4, C4)


class TestGrade:
    def test_on_edge_quotient(self, ring4, edge):
        assert grade(parse_ideal(ring4, "y1, y2"), edge) == 1

    def test_edge_ideal_on_ring(self, ring4, edge):
        assert grade(edge, zero_ideal(ring4)) == 2

    def test_regular_sequence(self, ring2):
        assert grade(parse_ideal(ring2, "x^2, y^3"), zero_ideal(ring2)) == 2

    def test_zero_relative_ideal(self, ring2):
        assert grade(zero_ideal(ring2), parse_ideal(ring2, "x*y")) == 0

    def test_degenerate_module(self, ring2):
        assert grade(parse_ideal(ring2, "x"), unit_ideal(ring2)) is None

    def test_unit_relative_ideal_rejected(self, ring2):
        with pytest.raises(ValueError):
            grade(unit_ideal(ring2), zero_ideal(ring2))

    def test_localization_engine_alone(self, ring4, edge):
        assert grade_by_localization(parse_ideal(ring4, "y1, y2"), edge) == 1
        assert grade_by_localization(edge, zero_ideal(ring4)) == 2

    def test_engines_agree_on_random(self, ring4):
        rng = np.random.default_rng(53)
        for _ in range(15):
            a = random_proper_ideal(rng, ring4, 3, 5)
            I = random_proper_ideal(rng, ring4, 3, 5)
            grade(a, I)  # raises EngineDisagreementError on any mismatch


class TestCd:
    def test_on_edge_quotient(self, ring4, edge):
        assert cd(parse_ideal(ring4, "y1, y2"), edge) == 1

    def test_edge_ideal_on_ring(self, ring4, edge):
        assert cd(edge, zero_ideal(ring4)) == 3

    def test_non_radical_input_sees_only_the_radical(self, ring2):
        assert cd(parse_ideal(ring2, "x*y, x^2"), zero_ideal(ring2)) == 1

    def test_support_fast_path_alone(self, ring4, edge):
        assert cd_by_support(parse_ideal(ring4, "y1, y2"), edge) == 1
        assert cd_by_support(edge, zero_ideal(ring4)) == 3

    def test_degenerate(self, ring2):
        assert cd(parse_ideal(ring2, "x"), unit_ideal(ring2)) is None


class TestRelativeInjectiveDimension:
    def test_equals_pd_of_relative_quotient(self, ring2):
        assert a_id(parse_ideal(ring2, "x*y, x^2"), zero_ideal(ring2)) == 2

    def test_on_edge_ideal(self, ring4, edge):
        assert a_id(edge, zero_ideal(ring4)) == 3

    def test_principal(self, ring2):
        assert a_id(parse_ideal(ring2, "x"), zero_ideal(ring2)) == 1

    def test_independent_of_the_module(self, ring2):
        a = parse_ideal(ring2, "x*y, x^2")
        for i_text in ("0", "y", "x^3", "x^2, y^2"):
            assert a_id(a, parse_ideal(ring2, i_text)) == 2


class TestRegularSequences:
    def test_variables_on_free_module(self, ring2):
        assert is_monomial_regular_sequence([(1, 0), (0, 1)], zero_ideal(ring2))

    def test_zero_divisor(self, ring2):
        assert not is_monomial_regular_sequence([(1, 0)], parse_ideal(ring2, "x*y"))

    def test_power_of_vertex_on_edge_quotient(self, ring4, edge):
        assert not is_monomial_regular_sequence([(0, 0, 2, 0)], edge)

    def test_sequence_collapsing_to_unit(self, ring2):
        assert not is_monomial_regular_sequence([(1, 0), (0, 1)], parse_ideal(ring2, "x^2, y^2"))

    def test_empty_sequence(self, ring2):
        assert is_monomial_regular_sequence([], parse_ideal(ring2, "x"))
        assert not is_monomial_regular_sequence([], unit_ideal(ring2))


class TestSopSearch:
    def test_generators_found_lex_first(self):
        ring = RingSpec(("x1", "x2", "x3", "x4"))
        w = sop_search(parse_ideal(ring, "x1^2, x2^3"), zero_ideal(ring), 4)
        assert w.status == SOP_FOUND
        assert w.sequence == ((0, 3, 0, 0), (2, 0, 0, 0))

    def test_variables_found(self, ring4):
        w = sop_search(parse_ideal(ring4, "y1, y2"), zero_ideal(ring4), 4)
        assert w.status == SOP_FOUND
        assert w.sequence == ((0, 0, 0, 1), (0, 0, 1, 0))

    def test_none_among_monomials_on_edge_quotient(self, ring4, edge):
        w = sop_search(parse_ideal(ring4, "y1, y2"), edge, 4)
        assert w.status == SOP_NONE_AMONG_MONOMIALS
        assert w.degree_bound == 4

    def test_degenerate_zero_length(self, ring2):
        w = sop_search(parse_ideal(ring2, "x"), parse_ideal(ring2, "x^2"), 4)
        assert w.status == SOP_DEGENERATE_ZERO_LENGTH
        assert w.sequence == ()

    def test_degenerate_module_rejected(self, ring2):
        with pytest.raises(ValueError):
            sop_search(parse_ideal(ring2, "x"), unit_ideal(ring2), 4)

    def test_support_search_same_existence(self, ring4):
        rng = np.random.default_rng(59)
        for _ in range(12):
            a = random_proper_ideal(rng, ring4, 2, 4)
            I = random_proper_ideal(rng, ring4, 2, 4)
            slow = sop_search(a, I, 3)
            fast = sop_witness_by_support(a, I, 3)
            assert slow.found == fast.found
            if fast.status == SOP_FOUND:
                # any found witness must itself certify the radical condition
                from relhom.invariants import _radical_supports, _radical_supports_with
                from relhom.monomials import support, sum_ideals

                target = _radical_supports(sum_ideals(a, I).gens)
                got = _radical_supports_with(
                    _radical_supports(I.gens), [support(e) for e in fast.sequence]
                )
                assert got == target
                assert all(a.contains_monomial(e) for e in fast.sequence)


class TestInvariantRecord:
    def test_edge_pair(self, ring4, edge):
        rec = invariant_record(parse_ideal(ring4, "y1, y2"), edge)
        assert (rec.grade, rec.cd, rec.mu, rec.a_id) == (1, 1, 2, 2)
        assert (rec.pd, rec.depth, rec.dim) == (3, 1, 2)
        assert (rec.ara_lower, rec.ara_upper) == (1, 2)  # no monomial witness at bound 4

    def test_ara_tightened_by_witness(self, ring4):
        rec = invariant_record(parse_ideal(ring4, "y1, y2"), zero_ideal(ring4))
        assert (rec.ara_lower, rec.ara_upper) == (2, 2)
        assert dict(rec.provenance)["ara"] == "sop_found"

    def test_degenerate(self, ring2):
        rec = invariant_record(parse_ideal(ring2, "x"), unit_ideal(ring2))
        assert rec.grade is None and rec.cd is None and rec.a_id is None
        assert rec.pd is None and rec.dim is None
        assert rec.mu == 1

    def test_degree_bound_controls_witness_tightening(self, ring2):
        # <x^2, y^3, x*y> has cd 2 on the ring; the witness (x^2, y^3) needs degree 3
        a = parse_ideal(ring2, "x^2, y^3, x*y")
        S = zero_ideal(ring2)
        loose = invariant_record(a, S, degree_bound=2)
        tight = invariant_record(a, S, degree_bound=3)
        assert (loose.ara_lower, loose.ara_upper) == (2, 3)
        assert (tight.ara_lower, tight.ara_upper) == (2, 2)
        assert sop_search(a, S, 2).status == SOP_NONE_AMONG_MONOMIALS
        assert sop_search(a, S, 3).status == SOP_FOUND

    def test_json_round_trip_keys(self, ring2):
        rec = invariant_record(parse_ideal(ring2, "x"), zero_ideal(ring2))
        payload = rec.to_json()
        assert set(payload) == {
            "grade", "cd", "mu", "a_id", "pd", "depth", "dim", "ara_lower", "ara_upper", "provenance",
        }

    def test_order_on_random(self, ring4):
        rng = np.random.default_rng(61)
        for _ in range(12):
            a = random_proper_ideal(rng, ring4, 3, 5)
            I = random_proper_ideal(rng, ring4, 3, 5)
            rec = invariant_record(a, I)
            assert rec.grade <= rec.cd <= rec.mu
            assert rec.ara_lower == rec.cd and rec.ara_upper <= rec.mu
            assert rec.a_id >= rec.grade


def test_mu(ring4, edge=None):
    assert mu(parse_ideal(ring4, C4)) == 4
    assert mu(zero_ideal(ring4)) == 0
    with pytest.raises(ValueError):
        mu(unit_ideal(ring4))


def test_engine_disagreement_is_distinct_error():
    assert issubclass(EngineDisagreementError, RuntimeError)
    assert not issubclass(EngineDisagreementError, ValueError)
