"""Counting isomorphism classes, and the plane geometry behind the
quadratic-parameter family.

Over a finite field the scaled families contribute one class per coset
of a fixed power of the unit group; count_classes evaluates the count
and c_orbit_count confirms that the quadratic family P4_4 always
collapses to a single class over small finite fields.
"""

from saalg import (count_classes, expand, parse_field, presentation,
                   totally_isotropic_plane)
from saalg.equivalence import c_orbit_count
from saalg.structure import lower_central_series

for spec in ("GF(3)", "GF(5)", "GF(7)", "GF(13)"):
    field = parse_field(spec)
    counts = {fam: count_classes(fam, field)
              for fam in ("P2_2", "P2_4", "P2_5", "P2_6")}
    print(spec, counts, "| P4_4 classes:", c_orbit_count(field))

# The P4_4 classifier rests on a geometric fact: each point of the
# four-dimensional quotient L/L^2 lies on exactly one plane that is
# totally isotropic for the commutator pencil, and these planes pair up
# into complementary decompositions.
field = parse_field("GF(3)")
A = expand(presentation("P4_4", field, (field.zero(), field.one())))
L2 = lower_central_series(A)[1]
u = L2.complement_basis()[0]
P = totally_isotropic_plane(A, u)
print("plane through first quotient basis vector:", P.rows)
