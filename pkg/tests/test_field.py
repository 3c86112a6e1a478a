"""Field arithmetic and the power-coset helpers."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from saalg.field import (ExtField, FieldError, PrimeField, QQ,
                         default_ext_field, is_irreducible_quadratic,
                         kth_powers, kth_root, parse_field,
                         power_coset_index, power_free_part,
                         same_power_coset)


FIELDS = [parse_field(s) for s in
          ("GF(2)", "GF(3)", "GF(5)", "GF(7)", "GF(2^2)", "GF(3^2)")]


def elements_of(field):
    return st.sampled_from(list(field.elements()))


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_field_axioms_exhaustive(field):
    elems = list(field.elements())
    zero, one = field.zero(), field.one()
    assert len(elems) == field.order
    for a in elems:
        assert field.add(a, zero) == a
        assert field.mul(a, one) == a
        assert field.add(a, field.neg(a)) == zero
        if a != zero:
            assert field.mul(a, field.inv(a)) == one
    for a in elems:
        for b in elems:
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_distributivity_sampled(field):
    elems = list(field.elements())

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(elems), st.sampled_from(elems),
           st.sampled_from(elems))
    def check(a, b, c):
        lhs = field.mul(a, field.add(b, c))
        rhs = field.add(field.mul(a, b), field.mul(a, c))
        assert lhs == rhs

    check()


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_parse_fmt_roundtrip(field):
    for a in field.elements():
        assert field.parse(field.fmt(a)) == a


def test_parse_field_specs():
    assert parse_field("Q") is QQ or parse_field("Q").spec() == "Q"
    F = parse_field("GF(7)")
    assert isinstance(F, PrimeField) and F.order == 7
    E = parse_field("GF(2^3)")
    assert isinstance(E, ExtField) and E.order == 8 and E.char == 2
    with pytest.raises(FieldError):
        parse_field("GF(6)")
    with pytest.raises(FieldError):
        parse_field("GF(4)")  # extensions are spelled GF(2^2)
    with pytest.raises(FieldError):
        parse_field("GF(2^9)")  # order beyond the supported range


def test_ext_field_modulus_is_irreducible():
    # the defining polynomial of a default extension has no root
    for p, n in ((2, 2), (2, 3), (3, 2), (5, 2)):
        F = default_ext_field(p, n)
        assert F.order == p ** n
        # Frobenius sanity: a^(q) == a for all a
        for a in F.elements():
            assert F.pow(a, F.order) == a


def test_rationals_basic():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert not QQ.is_finite
    with pytest.raises(FieldError):
        list(QQ.elements())


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
@pytest.mark.parametrize("k", [2, 3, 4, 11, 12])
def test_power_coset_index_matches_enumeration(field, k):
    # oracle: direct coset count of (F*)^k inside F*
    powers = kth_powers(field, k)
    units = set(field.units())
    assert power_coset_index(field, k) == len(units) // len(powers)


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_kth_root_and_coset(field):
    for k in (3, 4):
        for a in field.units():
            r = kth_root(field, a, k)
            if r is not None:
                assert field.pow(r, k) == a
                assert same_power_coset(field, field.one(), a, k)
            else:
                assert not same_power_coset(field, field.one(), a, k)


def test_same_power_coset_rationals():
    assert same_power_coset(QQ, Fraction(1), Fraction(16), 4)
    assert not same_power_coset(QQ, Fraction(1), Fraction(8), 4)
    assert same_power_coset(QQ, Fraction(2), Fraction(2 * 3 ** 11), 11)
    assert not same_power_coset(QQ, Fraction(1), Fraction(-16), 4)
    assert same_power_coset(QQ, Fraction(1), Fraction(-27), 3)


def test_power_free_part_is_canonical():
    assert power_free_part(QQ, Fraction(16), 4) == Fraction(1)
    assert power_free_part(QQ, Fraction(32), 4) == Fraction(2)
    assert power_free_part(QQ, Fraction(-8, 27), 3) == Fraction(-1)
    F = parse_field("GF(5)")
    for r in F.units():
        rep = power_free_part(F, r, 4)
        assert same_power_coset(F, r, rep, 4)


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_irreducibility_against_sympy(field):
    # independent oracle: factor t^2 + alpha t + beta over GF(q)
    if field.order != field.char:
        pytest.skip("sympy oracle drives the prime-field case")
    t = sympy.Symbol("t")
    for alpha in field.elements():
        for beta in field.elements():
            poly = sympy.Poly(t ** 2 + alpha * t + beta, t,
                              modulus=field.char)
            want = all(f.degree() > 1 for f, _ in poly.factor_list()[1])
            assert is_irreducible_quadratic(field, alpha, beta) == want


def test_irreducibility_rationals():
    assert is_irreducible_quadratic(QQ, Fraction(0), Fraction(1))
    assert is_irreducible_quadratic(QQ, Fraction(0), Fraction(-2))
    assert not is_irreducible_quadratic(QQ, Fraction(0), Fraction(-4))
    assert not is_irreducible_quadratic(QQ, Fraction(2), Fraction(1))
    assert is_irreducible_quadratic(QQ, Fraction(1), Fraction(1))
