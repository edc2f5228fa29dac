"""Decision procedures for the relative property lattice.

Each predicate is computed from its definition and cross-checked against an
equivalent characterization; disagreement raises
:class:`~relhom.invariants.EngineDisagreementError`.

Degenerate convention (I the unit ideal, so the module is zero): relative
Cohen-Macaulay and relative regular hold by the zero-module branch of their
definitions, while maximal Cohen-Macaulay and Gorenstein are reported as
not-applicable (``None``) because their comparisons presuppose a nonzero
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .invariants import (
    EngineDisagreementError,
    SopWitness,
    cd,
    cd_of_prime_quotient,
    grade,
    invariant_record,
    is_monomial_regular_sequence,
    mu,
    sop_witness_by_support,
    InvariantRecord,
)
from .monomials import (
    MonomialIdeal,
    RingMismatchError,
    associated_primes,
    format_monomial,
    zero_ideal,
)
from .slices import DegreeBox, ext_profile

__all__ = [
    "PropertyReport",
    "Witnesses",
    "is_relative_cm",
    "is_relative_max_cm",
    "is_relative_gorenstein",
    "is_relative_regular_ring",
    "is_relative_regular_module",
    "full_report",
]


def _check_pair(a: MonomialIdeal, I: MonomialIdeal):
    if a.ring != I.ring:
        raise RingMismatchError("ideals live over different rings")
    if a.is_unit:
        raise ValueError("the relative ideal must be proper")


def is_relative_cm(a: MonomialIdeal, I: MonomialIdeal, pad: int = 0) -> bool:
    """Relative Cohen-Macaulay: grade equals cd (zero modules qualify).

    Cross-check: cd on the quotient by every associated prime of I must
    equal the grade.
    """
    _check_pair(a, I)
    if I.is_unit:
        return True
    g = grade(a, I, pad)
    by_definition = g == cd(a, I, pad)
    by_ass_primes = all(cd_of_prime_quotient(a, P) == g for P in associated_primes(I))
    if by_definition != by_ass_primes:
        raise EngineDisagreementError(
            f"relative CM({a}; {I})",
            {"grade_eq_cd": by_definition, "ass_prime_criterion": by_ass_primes},
        )
    return by_definition


def is_relative_max_cm(a: MonomialIdeal, I: MonomialIdeal, pad: int = 0) -> bool:
    """Relative maximal Cohen-Macaulay: grade on the module equals cd on the ring."""
    _check_pair(a, I)
    if I.is_unit:
        raise ValueError("degenerate module: the comparison needs a nonzero module")
    return grade(a, I, pad) == cd(a, zero_ideal(a.ring), pad)


def is_relative_gorenstein(a: MonomialIdeal, I: MonomialIdeal, pad: int = 0) -> bool:
    """Relative Gorenstein: Ext(S/a, S/I) concentrated in index cd(a, S).

    Cross-check: maximal Cohen-Macaulay together with vanishing above that
    index decides the same property.
    """
    _check_pair(a, I)
    if I.is_unit:
        raise ValueError("degenerate module: the comparison needs a nonzero module")
    c_ring = cd(a, zero_ideal(a.ring), pad)
    profile = ext_profile(a, I, pad)
    concentrated = profile == frozenset({c_ring})
    via_max_cm = is_relative_max_cm(a, I, pad) and max(profile) <= c_ring
    if concentrated != via_max_cm:
        raise EngineDisagreementError(
            f"relative Gorenstein({a}; {I})",
            {"profile_concentrated": concentrated, "max_cm_and_upper_vanishing": via_max_cm},
        )
    return concentrated


def is_relative_regular_ring(a: MonomialIdeal, pad: int = 0) -> bool:
    """Relative regular ring: grade on the ring equals the number of generators."""
    if a.is_unit:
        raise ValueError("the relative ideal must be proper")
    return grade(a, zero_ideal(a.ring), pad) == mu(a)


def is_relative_regular_module(a: MonomialIdeal, I: MonomialIdeal, pad: int = 0) -> bool:
    """Relative regular module: grade(a, S/I) = grade(a, S) = mu(a).

    Zero modules qualify.  One-sided witness cross-check: if the minimal
    generators form a regular sequence on both S/I and S, the numeric
    verdict must be positive.
    """
    _check_pair(a, I)
    if I.is_unit:
        return True
    S = zero_ideal(a.ring)
    numeric = grade(a, I, pad) == grade(a, S, pad) == mu(a)
    witness = is_monomial_regular_sequence(a.gens, I) and is_monomial_regular_sequence(a.gens, S)
    if witness and not numeric:
        raise EngineDisagreementError(
            f"relative regular({a}; {I})",
            {"numeric": numeric, "generator_regular_sequence": witness},
        )
    return numeric


@dataclass(frozen=True)
class Witnesses:
    """Evidence attached to a report: a parameter-system witness and, when the
    generators themselves form the required regular sequence, that sequence."""

    sop: Optional[SopWitness]
    regular_sequence: Optional[tuple[tuple[int, ...], ...]]

    def to_json(self, ring) -> dict:
        sop = None
        if self.sop is not None:
            sop = {
                "status": self.sop.status,
                "sequence": [format_monomial(ring, e) for e in self.sop.sequence],
                "degree_bound": self.sop.degree_bound,
            }
        seq = None
        if self.regular_sequence is not None:
            seq = [format_monomial(ring, e) for e in self.regular_sequence]
        return {"sop": sop, "regular_sequence": seq}


@dataclass(frozen=True)
class PropertyReport:
    """Verdicts for the relative property lattice plus supporting data."""

    rel_cm: Optional[bool]
    rel_max_cm: Optional[bool]
    rel_gorenstein: Optional[bool]
    rel_regular_ring: bool
    rel_regular_module: Optional[bool]
    chain_consistent: bool
    witnesses: Witnesses
    invariants: InvariantRecord
    char: int
    box: tuple[int, ...]

    def to_json(self, ring) -> dict:
        return {
            "rel_cm": self.rel_cm,
            "rel_max_cm": self.rel_max_cm,
            "rel_gorenstein": self.rel_gorenstein,
            "rel_regular_ring": self.rel_regular_ring,
            "rel_regular_module": self.rel_regular_module,
            "chain_consistent": self.chain_consistent,
            "witnesses": self.witnesses.to_json(ring),
            "invariants": self.invariants.to_json(),
            "char": self.char,
            "box": list(self.box),
        }


def _implies(p: Optional[bool], q: Optional[bool]) -> bool:
    if p is not True:
        return True
    return q is True


def full_report(
    a: MonomialIdeal,
    I: MonomialIdeal,
    pad: int = 0,
    degree_bound: int = 4,
) -> PropertyReport:
    """All property verdicts, witnesses and invariants for the pair (a, S/I).

    ``chain_consistent`` records whether the implication chain
    regular => Gorenstein => maximal CM => CM held among the computed
    verdicts (skipping not-applicable entries).
    """
    _check_pair(a, I)
    ring = a.ring
    box = DegreeBox.for_ideals(a, I, pad=pad).rho
    record = invariant_record(a, I, pad=pad, degree_bound=degree_bound)
    reg_ring = is_relative_regular_ring(a, pad)
    if I.is_unit:
        return PropertyReport(
            rel_cm=True,
            rel_max_cm=None,
            rel_gorenstein=None,
            rel_regular_ring=reg_ring,
            rel_regular_module=True,
            chain_consistent=True,
            witnesses=Witnesses(sop=None, regular_sequence=None),
            invariants=record,
            char=ring.char,
            box=box,
        )
    cm = is_relative_cm(a, I, pad)
    max_cm = is_relative_max_cm(a, I, pad)
    gorenstein = is_relative_gorenstein(a, I, pad)
    reg_module = is_relative_regular_module(a, I, pad)
    sop = sop_witness_by_support(a, I, degree_bound)
    S = zero_ideal(ring)
    reg_seq = None
    if is_monomial_regular_sequence(a.gens, I) and is_monomial_regular_sequence(a.gens, S):
        reg_seq = a.gens
    chain = (
        _implies(gorenstein, max_cm)
        and _implies(max_cm, cm)
        and _implies(reg_module, gorenstein)
    )
    return PropertyReport(
        rel_cm=cm,
        rel_max_cm=max_cm,
        rel_gorenstein=gorenstein,
        rel_regular_ring=reg_ring,
        rel_regular_module=reg_module,
        chain_consistent=chain,
        witnesses=Witnesses(sop=sop, regular_sequence=reg_seq),
        invariants=record,
        char=ring.char,
        box=box,
    )
