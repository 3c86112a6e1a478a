"""A first tour: build an algebra from its presentation and check the
axioms hold.

The library works with dimension-10 symplectic alternating algebras.
A presentation stores only the structure constants that can be nonzero
on the standard symplectic basis (x1, y1, ..., x5, y5); expand() turns
it into a full multiplication table with exact field arithmetic.
"""

from saalg import expand, parse_field, presentation, verify_axioms
from saalg.structure import structure_report

field = parse_field("GF(5)")

# P2_2 is one of the scaled families; its single parameter lives in the
# multiplicative group of the field.
pres = presentation("P2_2", field, (field.from_int(2),))
print("presentation:")
print(pres.format())

A = expand(pres)
report = verify_axioms(A)
print("axioms hold:", report.ok)

# The structure report collects the invariants the classification keys
# on: central series dimensions, nilpotency class, centre.
rep = structure_report(A)
print("lower central series dims:", rep.lower_dims)
print("upper central series dims:", rep.upper_dims)
print("nilpotency class:", rep.cls)
print("centre dim:", rep.centre_dim, "(isotropic)" if rep.centre_isotropic
      else "(not isotropic)")

# The same construction works over the rationals.
from saalg import QQ
from fractions import Fraction

B = expand(presentation("P2_2", QQ, (Fraction(3, 7),)))
print("over Q, axioms hold:", verify_axioms(B).ok)
