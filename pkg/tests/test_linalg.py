"""Exact linear algebra and subspace machinery."""

import random

import pytest

from saalg.field import parse_field
from saalg.linalg import (Subspace, kernel_basis, identity, mat_inv,
                          mat_mul, mat_vec, quotient_coords, rank, rref,
                          solve, vec_is_zero)


F3 = parse_field("GF(3)")
F5 = parse_field("GF(5)")
F4 = parse_field("GF(2^2)")
FIELDS = [F3, F5, F4]


def random_matrix(field, rng, n, m):
    elems = list(field.elements())
    return [[rng.choice(elems) for _ in range(m)] for _ in range(n)]


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_rref_idempotent_and_rank(field):
    rng = random.Random(11)
    for _ in range(25):
        M = random_matrix(field, rng, rng.randint(1, 5), rng.randint(1, 5))
        R, piv = rref(field, [list(r) for r in M])
        R2, piv2 = rref(field, [list(r) for r in R])
        assert [list(r) for r in R] == [list(r) for r in R2]
        assert piv == piv2
        assert rank(field, M) == len(R)


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_solve_finds_actual_solutions(field):
    rng = random.Random(5)
    for _ in range(40):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        M = random_matrix(field, rng, n, m)
        x = [rng.choice(list(field.elements())) for _ in range(m)]
        b = mat_vec(field, M, x)
        got = solve(field, M, list(b))
        assert got is not None
        assert list(mat_vec(field, M, got)) == list(b)


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_solve_reports_inconsistency(field):
    one, zero = field.one(), field.zero()
    # x = 0 and x = 1 simultaneously
    assert solve(field, [[one], [one]], [zero, one]) is None


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_kernel_is_kernel(field):
    rng = random.Random(7)
    for _ in range(25):
        n, m = rng.randint(1, 5), rng.randint(1, 6)
        M = random_matrix(field, rng, n, m)
        ker = kernel_basis(field, M)
        for v in ker:
            assert vec_is_zero(field, mat_vec(field, M, list(v)))
        assert len(ker) == m - rank(field, M)


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_mat_inv_roundtrip(field):
    rng = random.Random(3)
    done = 0
    while done < 10:
        n = rng.randint(1, 5)
        M = random_matrix(field, rng, n, n)
        if rank(field, M) < n:
            continue
        Minv = mat_inv(field, M)
        assert mat_mul(field, M, Minv) == identity(field, n)
        done += 1


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_subspace_dim_formula(field):
    rng = random.Random(23)
    for _ in range(20):
        n = 6
        U = Subspace.span(field, n, random_matrix(field, rng, 3, n))
        V = Subspace.span(field, n, random_matrix(field, rng, 3, n))
        s = U.sum(V)
        i = U.intersect(V)
        assert s.dim + i.dim == U.dim + V.dim
        assert i <= U and i <= V and U <= s and V <= s


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_perp_against_standard_symplectic_gram(field):
    from saalg.core import standard_gram
    n = 3
    gram = standard_gram(field, n)
    rng = random.Random(2)
    for _ in range(15):
        U = Subspace.span(field, 2 * n, random_matrix(field, rng, 2, 2 * n))
        P = U.perp(gram)
        assert P.dim == 2 * n - U.dim
        assert P.perp(gram) == U


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_complement_basis(field):
    rng = random.Random(13)
    for _ in range(15):
        n = 6
        U = Subspace.span(field, n, random_matrix(field, rng, 3, n))
        comp = U.complement_basis()
        big = Subspace.span(field, n, list(U.rows) + list(comp))
        assert big.dim == n
        assert len(comp) == n - U.dim


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_quotient_coords(field):
    rng = random.Random(17)
    n = 6
    for _ in range(15):
        U = Subspace.span(field, n, random_matrix(field, rng, 3, n))
        qb = U.complement_basis()
        elems = list(field.elements())
        v = tuple(rng.choice(elems) for _ in range(n))
        c = quotient_coords(field, v, U, qb)
        # v minus the combination of quotient reps lands in U
        w = list(v)
        for ci, bi in zip(c, qb):
            w = [field.sub(a, field.mul(ci, b)) for a, b in zip(w, bi)]
        assert U.contains_vec(tuple(w))


def test_reduce_and_contains():
    U = Subspace.span(F3, 4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    assert U.contains_vec((1, 1, 1, 1))
    assert not U.contains_vec((1, 0, 0, 0))
    r = U.reduce_vec((1, 1, 1, 1))
    assert vec_is_zero(F3, r)
