"""Round trip: hide a canonical algebra behind a random symplectic
change of basis, then recover its class.

canonicalize() returns the canonical form (family tag plus parameters)
and a witness matrix. Transporting the scrambled table through the
witness reproduces the canonical presentation exactly, so the answer
can always be checked independently.
"""

from saalg import canonicalize, expand, parse_field, presentation
from saalg.classify import scramble
from saalg.families import form_presentation

field = parse_field("GF(3)")
A = expand(presentation("P2_5", field, (field.one(),)))

for seed in (0, 1, 2):
    B = scramble(A, seed=seed)
    form, witness = canonicalize(B)
    # the witness is a certificate, not a promise: check it
    recovered = B.transport(witness).presented_by()
    ok = recovered == form_presentation(form)
    print("seed", seed, "->", form, "| witness checks:", ok)

# Parameters come back up to equivalence, not on the nose. Over GF(5)
# the family P2_2 splits into four classes indexed by fourth-power
# cosets, and equiv_r decides membership with a scaling witness.
from saalg import equiv_r

F5 = parse_field("GF(5)")
C = scramble(expand(presentation("P2_2", F5, (F5.from_int(3),))), seed=9)
form, _ = canonicalize(C)
d = equiv_r("P2_2", F5.from_int(3), form.params[0], F5)
print("recovered parameter", form.params[0], "equivalent to 3:", d.equal,
      "(witness scalar", d.witness, ")")
