"""Relative property verdicts with witnesses and cross-checked invariants.

The lattice is: relative regular => relative Gorenstein => relative maximal
Cohen-Macaulay => relative Cohen-Macaulay.  Reports embed the invariant
record and carry parameter-system witnesses when one exists.
"""

import json

from relhom import RingSpec, full_report, parse_ideal, zero_ideal

ring = RingSpec(("x1", "x2", "y1", "y2"))
edge = parse_ideal(ring, "x1*x2, x2*y1, y1*y2, y2*x1")


def show(title, a, module_ideal):
    report = full_report(a, module_ideal)
    rec = report.invariants
    print(title)
    print(f"  grade {rec.grade}  cd {rec.cd}  mu {rec.mu}  a-id {rec.a_id}  ara [{rec.ara_lower}, {rec.ara_upper}]")
    print(
        "  CM {0}  maxCM {1}  Gorenstein {2}  regular(ring) {3}  regular(module) {4}".format(
            report.rel_cm,
            report.rel_max_cm,
            report.rel_gorenstein,
            report.rel_regular_ring,
            report.rel_regular_module,
        )
    )
    sop = report.witnesses.sop
    if sop is not None:
        print(f"  parameter-system search: {sop.status}")
    print()
    return report


# relative CM but not maximal: the ring-level cd is strictly larger
show("a = <y1,y2> on S/edge:", parse_ideal(ring, "y1, y2"), edge)

# not even relative CM: grade 2 < cd 3
show("a = edge ideal on S:", edge, zero_ideal(ring))

# Gorenstein without being regular: three generators but grade two
two_vars = RingSpec(("x", "y"))
show("a = <x^2,y^3,xy> on S:", parse_ideal(two_vars, "x^2, y^3, x*y"), zero_ideal(two_vars))

# everything holds: coprime pure powers are a regular sequence
four_vars = RingSpec(("x1", "x2", "x3", "x4"))
report = show("a = <x1^2,x2^3> on S:", parse_ideal(four_vars, "x1^2, x2^3"), zero_ideal(four_vars))

print("the JSON form of the last report:")
print(json.dumps(report.to_json(four_vars), indent=2, sort_keys=True))
