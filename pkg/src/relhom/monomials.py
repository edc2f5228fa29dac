"""Exact arithmetic and structure theory for monomial ideals.

Ideals are held in a canonical form (divisibility-minimal generators sorted
lexicographically), so ideal equality is tuple equality and every operation
is deterministic.  All values are immutable and every function is pure, so
results can be shared freely across threads.

Conventions: the empty generator tuple is the zero ideal, a single
all-zero exponent vector is the unit ideal.  Variable subsets are given by
position, never by name.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "RingSpec",
    "MonomialIdeal",
    "MonomialPrime",
    "RingMismatchError",
    "ParseError",
    "minimal_generators",
    "zero_ideal",
    "unit_ideal",
    "sum_ideals",
    "intersect",
    "quotient",
    "saturation",
    "radical",
    "radical_equal",
    "irreducible_decomposition",
    "associated_primes",
    "minimal_primes",
    "quotient_dimension",
    "ideal_height",
    "erase_to_zero",
    "erase_to_one",
    "monomials_up_to",
    "parse_ideal",
    "parse_monomial",
    "format_ideal",
    "format_monomial",
    "degree",
    "support",
]


class RingMismatchError(ValueError):
    """Operands live over different rings."""


class ParseError(ValueError):
    """Malformed monomial or ideal text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _is_prime(m: int) -> bool:
    # Deterministic Miller-Rabin; the witness set is exact far beyond 2**31.
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17):
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7, 11, 13, 17):
        x = pow(base, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring: variable names plus the coefficient characteristic.

    ``char`` must be 0 or a prime below 2**31; the homological engines
    additionally require a prime.  Restrictions to a variable subset (used
    by the erasure maps) may have zero variables.
    """

    names: tuple[str, ...]
    char: int = 32003

    def __post_init__(self):
        names = tuple(str(s) for s in self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be pairwise distinct")
        if self.char != 0 and not (2 <= self.char < 2**31 and _is_prime(self.char)):
            raise ValueError("characteristic must be 0 or a prime below 2**31")

    @property
    def n(self) -> int:
        return len(self.names)

    def restrict(self, keep) -> "RingSpec":
        keep = sorted(set(keep))
        return RingSpec(tuple(self.names[j] for j in keep), self.char)


def degree(e) -> int:
    """Total degree of an exponent vector."""
    return sum(e)


def support(e) -> frozenset[int]:
    """Positions of the variables appearing in an exponent vector."""
    return frozenset(j for j, x in enumerate(e) if x)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in canonical form.

    ``gens`` must already be divisibility-minimal and sorted; use
    :func:`minimal_generators` to build one from arbitrary exponent vectors.
    """

    ring: RingSpec
    gens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        n = self.ring.n
        for g in gens:
            if len(g) != n:
                raise ValueError(f"exponent vector {g} does not match ring with {n} variables")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")
        if list(gens) != sorted(set(gens)):
            raise ValueError("generators are not in canonical sorted order")
        for a in gens:
            for b in gens:
                if a != b and _divides(a, b):
                    raise ValueError("generators are not divisibility-minimal")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def mu(self) -> int:
        """Number of minimal generators (0 for the zero ideal)."""
        return len(self.gens)

    def contains_monomial(self, e) -> bool:
        e = tuple(e)
        if len(e) != self.ring.n:
            raise ValueError("exponent vector does not match the ring")
        return any(_divides(g, e) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        _check_ring(self, other)
        return all(self.contains_monomial(g) for g in other.gens)

    def __str__(self) -> str:
        return format_ideal(self)


@dataclass(frozen=True)
class MonomialPrime:
    """The prime generated by a subset of the variables."""

    ring: RingSpec
    vars: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(int(v) for v in self.vars)))
        object.__setattr__(self, "vars", vs)
        if vs and not (0 <= vs[0] and vs[-1] < self.ring.n):
            raise ValueError("variable index out of range")

    def to_ideal(self) -> MonomialIdeal:
        n = self.ring.n
        gens = [tuple(1 if j == v else 0 for j in range(n)) for v in self.vars]
        return minimal_generators(self.ring, gens)

    def contains_monomial(self, e) -> bool:
        return bool(support(e) & set(self.vars))

    def contains_ideal(self, A: MonomialIdeal) -> bool:
        if self.ring != A.ring:
            raise RingMismatchError("prime and ideal live over different rings")
        return all(self.contains_monomial(g) for g in A.gens)

    def __str__(self) -> str:
        return format_ideal(self.to_ideal())


def _check_ring(A: MonomialIdeal, B: MonomialIdeal):
    if A.ring != B.ring:
        raise RingMismatchError("ideals live over different rings")


def minimal_generators(ring: RingSpec, gens) -> MonomialIdeal:
    """Canonical ideal from arbitrary exponent vectors.

    Keeps the divisibility-minimal subset, sorted lexicographically.
    Idempotent; the empty input gives the zero ideal.
    """
    gens = sorted(set(tuple(int(x) for x in g) for g in gens))
    for g in gens:
        if len(g) != ring.n:
            raise ValueError(f"exponent vector {g} does not match ring with {ring.n} variables")
    minimal = [g for g in gens if not any(h != g and _divides(h, g) for h in gens)]
    return MonomialIdeal(ring, tuple(minimal))


def zero_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, ((0,) * ring.n,))


def sum_ideals(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    _check_ring(A, B)
    return minimal_generators(A.ring, A.gens + B.gens)


def intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    """Intersection, generated by pairwise lcms of the generators."""
    _check_ring(A, B)
    if A.is_unit:
        return B
    if B.is_unit:
        return A
    return minimal_generators(A.ring, [_lcm(a, b) for a in A.gens for b in B.gens])


def quotient(A: MonomialIdeal, m) -> MonomialIdeal:
    """Colon ideal (A : m) for a single monomial m.

    m is a nonzero-divisor on S/A exactly when (A : m) == A.
    """
    m = tuple(int(x) for x in m)
    if len(m) != A.ring.n:
        raise ValueError("exponent vector does not match the ring")
    return minimal_generators(A.ring, [tuple(max(g[j] - m[j], 0) for j in range(len(m))) for g in A.gens])


def saturation(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    """Saturation (A : B^infinity), by iterating generator-wise colons to a fixpoint.

    One step is (A : B) = the intersection of the colons by each generator.
    """
    _check_ring(A, B)
    current = A
    while B.gens:
        step = None
        for b in B.gens:
            part = quotient(current, b)
            step = part if step is None else intersect(step, part)
        if step == current:
            break
        current = step
    return current


def radical(A: MonomialIdeal) -> MonomialIdeal:
    """Radical: generated by the squarefree supports of the generators."""
    return minimal_generators(A.ring, [tuple(1 if x else 0 for x in g) for g in A.gens])


def radical_equal(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    _check_ring(A, B)
    return radical(A) == radical(B)


@lru_cache(maxsize=None)
def irreducible_decomposition(A: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    """Irredundant irreducible components, in a deterministic order.

    Splits the lexicographically first generator with mixed support on its
    first variable block, A = (A + <u>) cap (A + <v>); components generated
    by pure variable powers; a component containing another is pruned.
    """
    if A.is_zero or not A.is_proper:
        raise ValueError("irreducible decomposition needs a proper nonzero ideal")
    split = None
    for g in A.gens:
        if len(support(g)) >= 2:
            split = g
            break
    if split is None:
        return (A,)
    j = min(support(split))
    u = tuple(split[j] if k == j else 0 for k in range(len(split)))
    v = tuple(0 if k == j else split[k] for k in range(len(split)))
    parts = set()
    parts.update(irreducible_decomposition(sum_ideals(A, MonomialIdeal(A.ring, (u,)))))
    parts.update(irreducible_decomposition(sum_ideals(A, MonomialIdeal(A.ring, (v,)))))
    pruned = [C for C in parts if not any(D != C and C.contains_ideal(D) for D in parts)]
    return tuple(sorted(pruned, key=lambda C: C.gens))


def associated_primes(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    """Radicals of the irredundant irreducible components of I.

    The zero ideal has the single associated prime <0>.
    """
    if not I.is_proper:
        raise ValueError("the unit ideal has no associated primes")
    if I.is_zero:
        return (MonomialPrime(I.ring, ()),)
    seen = {tuple(sorted(set().union(*(support(g) for g in C.gens)))) for C in irreducible_decomposition(I)}
    return tuple(MonomialPrime(I.ring, vs) for vs in sorted(seen, key=lambda v: (len(v), v)))


def minimal_primes(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    primes = associated_primes(I)
    sets = [set(P.vars) for P in primes]
    keep = [P for P, s in zip(primes, sets) if not any(t < s for t in sets)]
    return tuple(keep)


def quotient_dimension(I: MonomialIdeal) -> int:
    """Krull dimension of S/I for proper I."""
    return I.ring.n - min(len(P.vars) for P in minimal_primes(I))


def ideal_height(I: MonomialIdeal) -> int:
    return I.ring.n - quotient_dimension(I)


def erase_to_zero(A: MonomialIdeal, F) -> MonomialIdeal:
    """Image of A in the quotient by the variables in F.

    Drops every generator whose support meets F; the result lives in the
    ring on the remaining variables.
    """
    F = frozenset(F)
    keep = [j for j in range(A.ring.n) if j not in F]
    gens = [tuple(g[j] for j in keep) for g in A.gens if not (support(g) & F)]
    return minimal_generators(A.ring.restrict(keep), gens)


def erase_to_one(A: MonomialIdeal, F) -> MonomialIdeal:
    """Image of A after inverting the variables in F (their exponents are deleted).

    Models localization at the prime on the complementary variables; the
    result lives in the ring on the remaining variables.
    """
    F = frozenset(F)
    keep = [j for j in range(A.ring.n) if j not in F]
    gens = [tuple(g[j] for j in keep) for g in A.gens]
    return minimal_generators(A.ring.restrict(keep), gens)


def monomials_up_to(n: int, bound: int):
    """All exponent vectors of total degree <= bound, in lexicographic order."""
    return [e for e in itertools.product(range(bound + 1), repeat=n) if sum(e) <= bound]


# ---------------------------------------------------------------------------
# Text grammar: monomial = product of name / name^k separated by '*';
# ideal = comma-separated monomials; '0' = zero ideal, '1' = unit ideal.
# ---------------------------------------------------------------------------

def format_monomial(ring: RingSpec, e) -> str:
    parts = []
    for name, k in zip(ring.names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def format_ideal(A: MonomialIdeal) -> str:
    if A.is_zero:
        return "0"
    if A.is_unit:
        return "1"
    return ", ".join(format_monomial(A.ring, g) for g in A.gens)


def _parse_factor(ring: RingSpec, text: str, pos: int):
    start = pos
    if pos >= len(text) or not (text[pos].isalpha() or text[pos] == "_"):
        raise ParseError("expected a variable name", pos)
    while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
        pos += 1
    name = text[start:pos]
    try:
        j = ring.names.index(name)
    except ValueError:
        raise ParseError(f"unknown variable {name!r}", start) from None
    k = 1
    if pos < len(text) and text[pos] == "^":
        pos += 1
        dstart = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == dstart:
            raise ParseError("expected an integer exponent after '^'", pos)
        k = int(text[dstart:pos])
    return j, k, pos


def parse_monomial(ring: RingSpec, text: str, pos: int = 0):
    """Parse one monomial starting at pos; returns (exponent, next position)."""
    e = [0] * ring.n
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        j, k, pos = _parse_factor(ring, text, pos)
        e[j] += k
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos < len(text) and text[pos] == "*":
            pos += 1
            continue
        return tuple(e), pos


def parse_ideal(ring: RingSpec, text: str) -> MonomialIdeal:
    """Parse an ideal expression in the monomial grammar."""
    stripped = text.strip()
    if stripped == "0":
        return zero_ideal(ring)
    if stripped == "1":
        return unit_ideal(ring)
    if not stripped:
        raise ParseError("empty ideal expression", 0)
    gens = []
    pos = 0
    while True:
        e, pos = parse_monomial(ring, text, pos)
        gens.append(e)
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        if text[pos] != ",":
            raise ParseError("expected ',' between monomials", pos)
        pos += 1
        rest = text[pos:]
        if not rest.strip():
            raise ParseError("trailing comma", pos)
    return minimal_generators(ring, gens)
