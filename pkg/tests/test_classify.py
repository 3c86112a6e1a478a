"""Canonicalization: scrambles, round trips, the phi pencil and the
type-C parameter extraction."""

import pytest

from saalg.classify import (canonicalize, centre4_type,
                            extract_c_params, phi, random_symplectic,
                            scramble, symplectic_basis,
                            totally_isotropic_plane, _solve_in)
from saalg.core import (Presentation, expand, is_symplectic, verify_axioms)
from saalg.families import (FAMILY_TAGS, default_params, form_presentation,
                            presentation)
from saalg.field import parse_field, QQ
from saalg.structure import centre, lower_central_series
from saalg import equivalence


F2 = parse_field("GF(2)")
F3 = parse_field("GF(3)")
F5 = parse_field("GF(5)")


def make(tag, field, params=None):
    if params is None:
        params = default_params(tag, field)
    return expand(presentation(tag, field, params))


def test_random_symplectic_is_symplectic_and_deterministic():
    for seed in range(5):
        M = random_symplectic(F5, 5, seed=seed)
        assert is_symplectic(expand(Presentation(F5, 5, {})), M)
        assert M == random_symplectic(F5, 5, seed=seed)


def test_scramble_preserves_axioms():
    A = make("P2_4", F3)
    B = scramble(A, seed=12)
    assert B.table != A.table
    assert verify_axioms(B).ok
    assert B.is_standard_gram()


def test_symplectic_basis_standardizes():
    A = make("P2_3", F5)
    M = random_symplectic(F5, 5, seed=8)
    # shuffle onto a non-standard basis by an invertible non-symplectic mix
    rows = [list(r) for r in M]
    rows[0] = [F5.add(a, b) for a, b in zip(rows[0], rows[2])]
    B = A.transport(rows)
    if B.is_standard_gram():
        pytest.skip("mix accidentally stayed symplectic")
    S = symplectic_basis(B)
    assert B.transport(S).is_standard_gram()


@pytest.mark.parametrize("tag", FAMILY_TAGS)
def test_roundtrip_gf3(tag):
    A = make(tag, F3)
    base, _ = canonicalize(A)
    assert base.tag == tag
    for seed in (1, 2):
        form, witness = canonicalize(scramble(A, seed=seed))
        assert form.tag == tag
        assert witness is not None


def test_roundtrip_witness_transports_exactly():
    A = scramble(make("P2_5", F3), seed=33)
    form, witness = canonicalize(A)
    assert A.transport(witness).presented_by() == form_presentation(form)


def test_roundtrip_param_equivalence_gf5():
    r = F5.from_int(2)
    A = make("P2_2", F5, (r,))
    for seed in (4, 9):
        form, _ = canonicalize(scramble(A, seed=seed))
        assert form.tag == "P2_2"
        assert equivalence.equiv_r("P2_2", r, form.params[0], F5).equal


def test_roundtrip_extension_field():
    F4 = parse_field("GF(2^2)")
    A = make("P2_7", F4)
    form, _ = canonicalize(scramble(A, seed=3))
    assert form.tag == "P2_7"


def test_roundtrip_rationals():
    A = make("P4_2", QQ)
    form, _ = canonicalize(scramble(A, seed=2))
    assert form.tag == "P4_2"


def test_out_of_scope_abelian():
    A = expand(Presentation(F3, 5, {}))
    form, witness = canonicalize(A)
    assert form.tag == "OutOfScope"
    assert witness is None
    assert form.reason


def test_canonicalize_rejects_wrong_dimension():
    A = expand(Presentation(F3, 3, {}))
    with pytest.raises(ValueError):
        canonicalize(A)


def test_phi_form_is_alternating():
    A = make("P4_4", F3)
    Z = centre(A)
    L2 = lower_central_series(A)[1]
    z1, _ = Z.complement_basis(inside=L2)
    form = phi(A, z1)
    import itertools
    elems = list(F3.elements())
    for u in itertools.product(elems, repeat=4):
        assert form.value(u, u) == F3.zero()
        for v in ((F3.one(),) + (F3.zero(),) * 3,):
            assert form.value(u, v) == F3.neg(form.value(v, u))


@pytest.mark.parametrize("tag,kind", [("P4_2", "A"), ("P4_3", "B"),
                                      ("P4_4", "C")])
def test_centre4_type(tag, kind):
    for field in (F3, F5):
        assert centre4_type(make(tag, field)).tag == kind
    assert centre4_type(make(tag, F2)).tag == kind


def test_centre4_type_params_match_family():
    t = centre4_type(make("P4_4", F5))
    assert t.tag == "C"
    assert t.params == default_params("P4_4", F5)


def test_totally_isotropic_plane_contains_point():
    A = make("P4_4", F3)
    L2 = lower_central_series(A)[1]
    from saalg.linalg import quotient_coords
    qb = L2.complement_basis()
    u = qb[0]
    P = totally_isotropic_plane(A, u)
    assert P.dim == 2
    assert P.contains_vec(tuple(quotient_coords(F3, u, L2, qb)))
    with pytest.raises(ValueError):
        totally_isotropic_plane(A, A.x(1))


def test_extract_c_params_default_choices():
    for field in (F3, F5):
        A = make("P4_4", field)
        Z = centre(A)
        L2 = lower_central_series(A)[1]
        z1, _ = Z.complement_basis(inside=L2)
        y1v = _solve_in(A, L2, [(z1, field.neg(field.one()))])
        assert extract_c_params(A, z1, y1v) == default_params("P4_4", field)
