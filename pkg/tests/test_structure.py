"""Central series, centre, isotropy and the maximal-class test."""

import pytest

from saalg.core import Presentation, expand
from saalg.families import FAMILY_TAGS, default_params, presentation
from saalg.field import parse_field, QQ
from saalg.linalg import Subspace
from saalg.structure import (centralizer_of, centre, full_space,
                             is_isotropic, is_maximal_class, is_nilpotent,
                             lower_central_series, nilpotency_class,
                             product_space, structure_report,
                             upper_central_series)


F2 = parse_field("GF(2)")
F3 = parse_field("GF(3)")
F5 = parse_field("GF(5)")

LOWER_DIMS = {
    "P4_1": [10, 6, 3, 0],
    "P4_2": [10, 6, 4, 0],
    "P4_3": [10, 6, 4, 0],
    "P4_4": [10, 6, 4, 0],
    "P2_1": [10, 8, 7, 5, 3, 2, 0],
    "P2_2": [10, 8, 7, 5, 3, 2, 0],
    "P2_3": [10, 8, 7, 6, 4, 3, 2, 0],
    "P2_4": [10, 8, 7, 6, 4, 3, 2, 0],
    "P2_5": [10, 8, 7, 6, 4, 3, 2, 0],
    "P2_6": [10, 8, 7, 6, 4, 3, 2, 0],
    "P2_7": [10, 8, 7, 6, 4, 3, 2, 0],
}


def make(tag, field):
    return expand(presentation(tag, field, default_params(tag, field)))


@pytest.mark.parametrize("field", [F2, F3, F5, QQ], ids=lambda f: f.spec())
@pytest.mark.parametrize("tag", FAMILY_TAGS)
def test_series_dims(tag, field):
    A = make(tag, field)
    rep = structure_report(A)
    assert rep.lower_dims == LOWER_DIMS[tag]
    assert rep.nilpotent
    assert rep.cls == len(LOWER_DIMS[tag]) - 1
    # upper dims mirror the lower ones through the form
    assert rep.upper_dims == [10 - d for d in rep.lower_dims]
    assert rep.centre_isotropic
    assert rep.centre_dim == (4 if tag.startswith("P4") else 2)


@pytest.mark.parametrize("tag", FAMILY_TAGS)
def test_upper_series_is_perp_of_lower(tag):
    A = make(tag, F3)
    lcs = lower_central_series(A)
    ucs = upper_central_series(A)
    for i in range(1, len(ucs)):
        if i < len(lcs):
            assert ucs[i] == lcs[i].perp(A.gram)


def test_maximal_class():
    # class 7 on dimension 10 is maximal class, class 6 and 3 are not
    assert is_maximal_class(make("P2_3", F3))
    assert is_maximal_class(make("P2_7", F5))
    assert not is_maximal_class(make("P2_1", F3))
    assert not is_maximal_class(make("P4_2", F3))


def test_product_space_examples():
    A = make("P2_1", F3)
    lcs = lower_central_series(A)
    L3 = lcs[2]
    got = product_space(A, L3, L3)
    assert got == Subspace.span(F3, 10, [A.x(5)])
    zero = Subspace.zero(F3, 10)
    assert product_space(A, zero, zero) == zero


def test_product_space_monotone():
    A = make("P2_6", F5)
    lcs = lower_central_series(A)
    full = full_space(A)
    for i in range(len(lcs) - 1):
        assert product_space(A, lcs[i], full) == lcs[i + 1]


def test_centre_and_centralizer():
    A = make("P4_1", F3)
    Z = centre(A)
    assert Z.dim == 4
    for z in Z.rows:
        for b in range(10):
            assert all(c == F3.zero()
                       for c in A.product(z, A.basis_vec(b)))
    Z2 = centralizer_of(A, Z)
    assert Z2 == upper_central_series(A)[2]


def test_abelian_not_in_scope_of_class():
    A = expand(Presentation(F3, 5, {}))
    assert is_nilpotent(A)
    assert nilpotency_class(A) == 1
    assert centre(A).dim == 10
    assert not is_isotropic(A, centre(A))


def test_isotropy():
    A = make("P2_2", F2)
    assert is_isotropic(A, centre(A))
    assert not is_isotropic(A, full_space(A))
