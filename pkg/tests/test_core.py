"""Presentations, table expansion and the algebra axioms."""

import random

import pytest

from saalg.core import (Presentation, PresentationError, SAAlgebra, expand,
                        standard_gram, verify_axioms, xi, yi)
from saalg.families import FAMILY_TAGS, default_params, presentation
from saalg.field import parse_field, QQ


F2 = parse_field("GF(2)")
F3 = parse_field("GF(3)")
F5 = parse_field("GF(5)")
TEST_FIELDS = [F2, F3, F5, parse_field("GF(7)"),
               parse_field("GF(2^2)"), parse_field("GF(3^2)"), QQ]


def all_canonical(field):
    for tag in FAMILY_TAGS:
        yield tag, presentation(tag, field, default_params(tag, field))


def test_expand_p41_y2y3():
    # (y2y3, y4) = 1 forces y2*y3 = x4
    A = expand(presentation("P4_1", F3))
    prod = A.product(A.y(2), A.y(3))
    assert prod == A.x(4)


def test_expand_p23_products():
    A = expand(presentation("P2_3", F3))
    assert A.product(A.y(1), A.y(2)) == A.x(4)
    assert A.product(A.x(1), A.y(2)) == A.x(5)


def test_expand_empty_is_abelian():
    A = expand(Presentation(F3, 5, {}))
    z = tuple(F3.zero() for _ in range(10))
    for a in range(10):
        for b in range(10):
            assert A.table[a][b] == z


@pytest.mark.parametrize("field", TEST_FIELDS, ids=lambda f: f.spec())
def test_axioms_all_canonical(field):
    for tag, pres in all_canonical(field):
        rep = verify_axioms(expand(pres))
        assert rep.ok, "%s over %s: %s" % (tag, field.spec(), rep.failures)


def test_axioms_zero_algebra():
    assert verify_axioms(expand(Presentation(F2, 5, {}))).ok


def test_axioms_catch_broken_invariance():
    # hand-built table: y2*y3 = x4 is the only product, so the x4 row
    # is zero and invariance fails at the triple (y2, y3, y4)
    zero_vec = [F3.zero()] * 10
    table = [[list(zero_vec) for _ in range(10)] for _ in range(10)]
    x4 = [F3.zero()] * 10
    x4[xi(4)] = F3.one()
    table[yi(2)][yi(3)] = list(x4)
    table[yi(3)][yi(2)] = [F3.neg(c) for c in x4]
    B = SAAlgebra(F3, 5, table, standard_gram(F3, 5))
    rep = verify_axioms(B)
    assert not rep.ok
    assert any("invariance" in f for f in rep.failures)


def test_axioms_catch_degenerate_gram():
    gram = [[F3.zero()] * 10 for _ in range(10)]
    z = [[F3.zero()] * 10 for _ in range(10)]
    B = SAAlgebra(F3, 5, [[row[:] for row in z] for _ in range(10)], gram)
    rep = verify_axioms(B)
    assert not rep.ok


def test_triple_alternating_and_cyclic():
    A = expand(presentation("P2_5", F5, (F5.from_int(2),)))
    rng = random.Random(31)
    elems = list(F5.elements())
    for _ in range(40):
        u, v, w = (tuple(rng.choice(elems) for _ in range(10))
                   for _ in range(3))
        t = A.triple(u, v, w)
        assert t == A.triple(v, w, u)
        assert t == F5.neg(A.triple(v, u, w))
        assert A.triple(u, u, w) == F5.zero()


def test_triple_reads_defining_constants():
    r = F5.from_int(3)
    A = expand(presentation("P2_2", F5, (r,)))
    assert A.triple(A.x(3), A.y(4), A.y(5)) == r
    alpha, beta = default_params("P4_4", F5)
    B = expand(presentation("P4_4", F5, (alpha, beta)))
    assert B.triple(B.x(1), B.y(3), B.y(4)) == alpha


def test_expand_injective_on_presentations():
    seen = {}
    for tag, pres in all_canonical(F3):
        key = expand(pres).table
        assert key not in seen.values()
        seen[tag] = key


def test_standard_gram_shape():
    g = standard_gram(F3, 5)
    one = F3.one()
    for i in range(1, 6):
        assert g[xi(i)][yi(i)] == one
        assert g[yi(i)][xi(i)] == F3.neg(one)


def test_transport_preserves_axioms_and_invariants():
    from saalg.classify import random_symplectic
    A = expand(presentation("P2_4", F3, (F3.one(),)))
    M = random_symplectic(F3, 5, seed=4)
    B = A.transport(M)
    assert verify_axioms(B).ok
    assert B.is_standard_gram()


def test_presented_by_roundtrip():
    for tag, pres in all_canonical(F5):
        assert expand(pres).presented_by() == pres


def test_file_format_roundtrip():
    for tag, pres in all_canonical(F5):
        again = Presentation.parse(pres.format())
        assert again == pres
    # rationals with fraction coefficients
    from fractions import Fraction
    p = presentation("P2_2", QQ, (Fraction(3, 7),))
    assert Presentation.parse(p.format()) == p


def test_file_format_errors():
    with pytest.raises(PresentationError):
        Presentation.parse("GF(3)\n")
    with pytest.raises(PresentationError):
        Presentation.parse("GF(3)\nn=5\nxyz 1 2 3 = 1\n")
    with pytest.raises(PresentationError):
        Presentation.parse("GF(3)\nn=5\nxyy 1 2 3 = 7/2\n")
