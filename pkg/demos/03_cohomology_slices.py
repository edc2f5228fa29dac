"""Degreewise Ext and local cohomology over the stabilization box.

Every multidegree of each complex is a tiny sign matrix; exact ranks over
the prime field give the slice dimensions.  A finite box decides whether
the whole module vanishes, so nonvanishing index sets (profiles) are exact.
"""

from relhom import RingSpec, parse_ideal, zero_ideal
from relhom.slices import ext_profile, ext_table, lc_profile, lc_table, local_cohomology_slice

ring = RingSpec(("x1", "x2", "y1", "y2"))
edge = parse_ideal(ring, "x1*x2, x2*y1, y1*y2, y2*x1")
a = parse_ideal(ring, "y1, y2")
S = zero_ideal(ring)

print("local cohomology of S/edge supported on <y1,y2>:")
print("  profile:", sorted(lc_profile(a, edge)), " (one index: the pair is relative Cohen-Macaulay)")

print("local cohomology of S supported on the edge ideal:")
print("  profile:", sorted(lc_profile(edge, S)), " (grade 2, cohomological dimension 3)")

print("Ext(S/a, S/edge) nonvanishing indices:", sorted(ext_profile(a, edge)))

# the first local cohomology of S/edge at the irrelevant ideal is a single
# one-dimensional slice sitting at multidegree zero
maximal = parse_ideal(ring, "x1, x2, y1, y2")
table = lc_table(maximal, edge)
print()
print("H^1 of S/edge at the irrelevant ideal:")
print("  total dimension over the box:", table.total(1))
print("  nonzero slices:", table.hilbert(1))
print("  slice at 0 directly:", local_cohomology_slice(maximal, edge, 1, (0, 0, 0, 0)))

# Ext tables expose the full Hilbert data as well
two_vars = RingSpec(("x", "y"))
power = parse_ideal(two_vars, "x^2, y^3, x*y")
ext = ext_table(power, zero_ideal(two_vars))
print()
print("Ext(S/<x^2,y^3,xy>, S): profile", sorted(ext.profile()))
print("  top slice dimensions by degree:", ext.hilbert(2))
