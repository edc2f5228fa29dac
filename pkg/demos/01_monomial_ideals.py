"""Monomial ideal arithmetic: canonical forms, colons, radicals, decomposition.

Everything is exact and deterministic: ideals are stored by their unique
minimal generating set, so equality is literal equality.
"""

from relhom import (
    RingSpec,
    associated_primes,
    erase_to_one,
    erase_to_zero,
    format_ideal,
    intersect,
    irreducible_decomposition,
    minimal_primes,
    parse_ideal,
    quotient,
    quotient_dimension,
    radical,
    saturation,
)

ring = RingSpec(("x1", "x2", "y1", "y2"))
edge = parse_ideal(ring, "x1*x2, x2*y1, y1*y2, y2*x1")  # edge ideal of a 4-cycle

print("the 4-cycle edge ideal:", format_ideal(edge))

p1 = parse_ideal(ring, "x1, y1")
p2 = parse_ideal(ring, "x2, y2")
print("as an intersection:    ", format_ideal(intersect(p1, p2)))
print("irreducible components:", [format_ideal(C) for C in irreducible_decomposition(edge)])
print("associated primes:     ", [str(P) for P in associated_primes(edge)])
print("minimal primes:        ", [str(P) for P in minimal_primes(edge)])
print("dim of the quotient:   ", quotient_dimension(edge))

print()
print("colon by the vertex x1:", format_ideal(quotient(edge, (1, 0, 0, 0))))

two_vars = RingSpec(("x", "y"))
mixed = parse_ideal(two_vars, "x^2, x*y")
print()
print("a mixed ideal:", format_ideal(mixed))
print("its radical:  ", format_ideal(radical(mixed)))
print("saturating by y strips the embedded part:", format_ideal(saturation(mixed, parse_ideal(two_vars, "y"))))
print("saturating by x removes everything:      ", format_ideal(saturation(mixed, parse_ideal(two_vars, "x"))))

print()
print("erasure maps (images in smaller rings):")
to_zero = erase_to_zero(edge, {2, 3})  # quotient by y1, y2
print("  kill y1,y2:  ", format_ideal(to_zero), "in", ", ".join(to_zero.ring.names))
to_one = erase_to_one(edge, {2, 3})  # invert y1, y2
print("  invert y1,y2:", format_ideal(to_one), "(the unit ideal: y1*y2 became invertible)")
