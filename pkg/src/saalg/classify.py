"""Constructive classification of dimension-10 nilpotent symplectic
alternating algebras with isotropic centre.

canonicalize() dispatches on centre dimension and nilpotency class, builds
a symplectic basis adapted to the characteristic flag of the algebra, and
runs explicit normalizing substitutions until the multiplication table
equals a canonical one.  Every stage is assertion-checked and the result
carries the full witness basis change.
"""

import random

from .core import is_symplectic, standard_gram, xi, yi
from .families import CanonicalForm, presentation, out_of_scope
from .field import is_irreducible_quadratic
from .linalg import (Subspace, identity, kernel_basis, mat_inv, mat_mul,
                     rref, solve, unit_vec, vec_add, vec_scale, vec_sub,
                     zeros_vec)
from .structure import (centre, centralizer_of, is_isotropic,
                        lower_central_series)


class ClassifyError(RuntimeError):
    """An internal consistency check failed during canonicalization."""


# ---------------------------------------------------------------------------
# scrambling


def _random_elem(field, rng):
    if field.is_finite:
        els = list(field.elements())
        return els[rng.randrange(len(els))]
    return field.from_int(rng.randint(-3, 3))


def random_symplectic(field, n, seed, steps=25):
    """Rows of a random symplectic matrix: a seeded product of symplectic
    transvections x -> x + c*(x,v)*v, which always preserve the form."""
    rng = random.Random(seed)
    dim = 2 * n
    G = standard_gram(field, n)
    zero = field.zero()
    M = [list(r) for r in identity(field, dim)]
    for _ in range(steps):
        v = [_random_elem(field, rng) for _ in range(dim)]
        if all(c == zero for c in v):
            continue
        c = _random_elem(field, rng)
        if c == zero:
            continue
        Gv = [sum_pair(field, G[a], v) for a in range(dim)]
        # apply the transvection T to every current basis row: T(u) =
        # u + c*(u,v)*v with (u,v) computed against the standard gram
        newM = []
        for row in M:
            pu = zero
            for a, ca in enumerate(row):
                if ca != zero and Gv[a] != zero:
                    pu = field.add(pu, field.mul(ca, Gv[a]))
            newM.append(vec_add(field, row, vec_scale(field, field.mul(c, pu),
                                                      v)))
        M = [list(r) for r in newM]
    return [tuple(r) for r in M]


def sum_pair(field, u, v):
    s = field.zero()
    for a, b in zip(u, v):
        if a != field.zero() and b != field.zero():
            s = field.add(s, field.mul(a, b))
    return s


def scramble(A, seed, steps=25):
    """The same algebra on a random symplectic basis (seeded)."""
    return A.transport(random_symplectic(A.field, A.n, seed, steps))


# ---------------------------------------------------------------------------
# frame machinery


def _fsum(field, items):
    s = field.zero()
    for a in items:
        s = field.add(s, a)
    return s


def _combine(field, coeffs, rows, dim):
    v = list(zeros_vec(field, dim))
    for c, r in zip(coeffs, rows):
        if c != field.zero():
            for t, x in enumerate(r):
                if x != field.zero():
                    v[t] = field.add(v[t], field.mul(c, x))
    return tuple(v)


def _solve_in(A, space, constraints, avoid=None):
    """A vector v in `space` with prescribed pairings (v, w) = c for the
    (w, c) pairs in `constraints`; optionally forced outside `avoid` by
    adding a homogeneous solution.  Deterministic (first echelon solution).
    """
    F = A.field
    rows = space.rows
    if not rows:
        raise ClassifyError("frame solve over the zero space")
    if constraints:
        M = [[A.pairing(r, w) for r in rows] for (w, _) in constraints]
        b = [val for (_, val) in constraints]
        a = solve(F, M, b)
        if a is None:
            raise ClassifyError("inconsistent frame constraints")
        hom = kernel_basis(F, M)
    else:
        a = zeros_vec(F, len(rows))
        hom = identity(F, len(rows))
    v = _combine(F, a, rows, A.dim)
    if avoid is not None and avoid.contains_vec(v):
        for h in hom:
            w2 = vec_add(F, v, _combine(F, h, rows, A.dim))
            if not avoid.contains_vec(w2):
                v = w2
                break
        else:
            raise ClassifyError("frame vector is trapped in the excluded "
                                "subspace")
    return v


def _frame(A, plan):
    """Assemble a symplectic basis from a plan of per-coordinate choices.

    Plan items: ("vec", index, vector) fixes a vector outright;
    ("in", index, space[, avoid]) solves for a vector of the subspace whose
    pairings against all previously chosen vectors match the standard Gram
    matrix.  Returns the rows in coordinate order and checks the result is
    symplectic.

    Earlier choices can shadow a later dual functional: a chosen vector
    may carry a component of a deeper x whose symplectic partner is only
    fixed afterwards, which makes the partner's constraint system
    inconsistent.  When that happens while solving some y_j, the
    constraints against repairable earlier slots (those whose subspace
    contains x_j) are dropped and the slots are repaired afterwards by
    adding the matching multiple of x_j; all previously satisfied
    constraints survive because x_j already pairs to zero with everything
    settled before y_j.
    """
    F = A.field
    G = standard_gram(F, A.n)
    chosen = {}
    spaces = {}
    avoids = {}
    for item in plan:
        kind, idx = item[0], item[1]
        if kind == "vec":
            chosen[idx] = tuple(item[2])
            continue
        space = item[2]
        avoid = item[3] if len(item) > 3 else None
        spaces[idx] = space
        avoids[idx] = avoid
        cons = [(w, G[idx][j]) for j, w in chosen.items()]
        try:
            v = _solve_in(A, space, cons, avoid)
        except ClassifyError:
            if idx % 2 == 0:
                raise
            dual = idx - 1
            if dual not in chosen:
                raise
            xj = chosen[dual]
            droppable = [k for k in chosen
                         if k != dual and k in spaces
                         and spaces[k].contains_vec(xj)]
            if not droppable:
                raise
            cons = [(w, G[idx][j]) for j, w in chosen.items()
                    if j not in droppable]
            v = _solve_in(A, space, cons, avoid)
            for k in droppable:
                delta = F.sub(A.pairing(v, chosen[k]), G[idx][k])
                if delta != F.zero():
                    chosen[k] = vec_add(F, chosen[k],
                                        vec_scale(F, delta, xj))
                    if avoids[k] is not None and \
                            avoids[k].contains_vec(chosen[k]):
                        raise ClassifyError("frame repair pushed a vector "
                                            "into its excluded subspace")
        chosen[idx] = v
    rows = [chosen[i] for i in range(A.dim)]
    if not is_symplectic(A, rows):
        raise ClassifyError("frame is not symplectic")
    return rows


def _cap(A, S, U, T):
    """The subspace {x in S : x.u in T for every u in U}."""
    F = A.field
    rows = S.rows
    if not rows:
        return S
    M = []
    for u in U.rows:
        prods = [T.reduce_vec(A.product(r, u)) for r in rows]
        for t in range(A.dim):
            M.append([p[t] for p in prods])
    out = []
    for k in kernel_basis(F, M) if M else identity(F, len(rows)):
        out.append(_combine(F, k, rows, A.dim))
    return Subspace.span(F, A.dim, out)


def _ann(A, S, U):
    """{x in S : x.u = 0 for every u in U}."""
    return _cap(A, S, U, Subspace.zero(A.field, A.dim))


# ---------------------------------------------------------------------------
# substitution machinery


class _Chain:
    """Tracks the running algebra and the composite basis change."""

    def __init__(self, A):
        self.A = A
        self.M = identity(A.field, A.dim)

    def push(self, rows):
        self.A = self.A.transport(rows)
        self.M = mat_mul(self.A.field, rows, self.M)
        if not self.A.is_standard_gram():
            raise ClassifyError("substitution broke the symplectic form")


def _lin(A, terms):
    """Vector sum of (coefficient, coordinate index) terms."""
    F = A.field
    v = list(zeros_vec(F, A.dim))
    for c, idx in terms:
        v[idx] = F.add(v[idx], c)
    return tuple(v)


def _rows_subst(A, repl):
    """Simultaneous basis replacement: repl maps coordinate index to a
    term list; everything unlisted stays put."""
    rows = [list(unit_vec(A.field, A.dim, t)) for t in range(A.dim)]
    for idx, terms in repl.items():
        rows[idx] = list(_lin(A, terms))
    return rows


def _rows_new_x(A, k, w):
    """Replace x_k by the vector w (an x-coordinate combination with a
    nonzero x_k component) and repair the y's dually so the basis stays
    symplectic: y_k scales by the inverse leading coefficient and each
    other y_j involved absorbs a multiple of y_k."""
    F = A.field
    zero = F.zero()
    coeffs = {}
    for t, c in enumerate(w):
        if c != zero:
            if t % 2:
                raise ClassifyError("x_%d redefinition has y components" % k)
            coeffs[t // 2 + 1] = c
    ck = coeffs.get(k)
    if ck is None:
        raise ClassifyError("x_%d component vanished in redefinition" % k)
    rows = [list(unit_vec(F, A.dim, t)) for t in range(A.dim)]
    rows[xi(k)] = list(w)
    rows[yi(k)] = list(vec_scale(F, F.inv(ck), A.y(k)))
    for j, cj in coeffs.items():
        if j != k:
            rows[yi(j)] = list(vec_sub(F, A.y(j),
                                       vec_scale(F, F.div(cj, ck), A.y(k))))
    return rows


def _rows_scale_pair(A, i, c):
    """x_i -> c*x_i, y_i -> y_i/c."""
    F = A.field
    rows = [list(unit_vec(F, A.dim, t)) for t in range(A.dim)]
    rows[xi(i)][xi(i)] = c
    rows[yi(i)][yi(i)] = F.inv(c)
    return rows


def _rows_pair_block(A, idxs, N):
    """Block substitution on the symplectic pairs listed in idxs: the new
    y's are N times the old ones, the x's get the inverse transpose."""
    F = A.field
    rows = [list(unit_vec(F, A.dim, t)) for t in range(A.dim)]
    Ninv = mat_inv(F, N)
    for a, i in enumerate(idxs):
        rows[yi(i)] = list(_lin(A, [(N[a][b], yi(j))
                                    for b, j in enumerate(idxs)]))
        rows[xi(i)] = list(_lin(A, [(Ninv[b][a], xi(j))
                                    for b, j in enumerate(idxs)]))
    return rows


def _t(A, a, b, c):
    return A.pairing(A.table[a][b], A.basis_vec(c))


def _txyy(A, i, j, k):
    return _t(A, xi(i), yi(j), yi(k))


def _tyyy(A, i, j, k):
    return _t(A, yi(i), yi(j), yi(k))


def _expect_product(A, a, b, terms, what):
    if A.table[a][b] != _lin(A, terms):
        raise ClassifyError("normalized state check failed: %s" % what)


def _only_x_coords(A, v, allowed, what):
    """Check v is supported on the x coordinates of the indices in
    `allowed` and return the coefficient dict."""
    F = A.field
    out = {}
    for t, c in enumerate(v):
        if c != F.zero():
            if t % 2 or (t // 2 + 1) not in allowed:
                raise ClassifyError("unexpected component in %s" % what)
            out[t // 2 + 1] = c
    return out


def _kill_affine(chain, rows_fn, resid_fn, nparams):
    """Solve for substitution parameters that zero out the residual
    triples.  The parametrized substitution must act affinely on the
    residuals, which is checked by the final assertion."""
    A = chain.A
    F = A.field
    zero, one = F.zero(), F.one()
    base = list(resid_fn(A.transport(rows_fn(A, [zero] * nparams))))
    cols = []
    for i in range(nparams):
        p = [zero] * nparams
        p[i] = one
        r = resid_fn(A.transport(rows_fn(A, p)))
        cols.append([F.sub(v, b) for v, b in zip(r, base)])
    M = [[cols[j][t] for j in range(nparams)] for t in range(len(base))]
    sol = solve(F, M, [F.neg(v) for v in base])
    if sol is None:
        raise ClassifyError("residuals cannot be removed linearly")
    chain.push(rows_fn(A, list(sol)))
    if any(v != zero for v in resid_fn(chain.A)):
        raise ClassifyError("residuals survived the correction")


def _finish(chain, tag, params=()):
    target = presentation(tag, chain.A.field, params)
    got = chain.A.presented_by()
    if got != target:
        raise ClassifyError("normalization missed %s: measured %r"
                            % (tag, got))
    return CanonicalForm(tag, chain.A.field, params), chain.M


# ---------------------------------------------------------------------------
# symplectic pre-normalization and dispatch


def symplectic_basis(A):
    """Rows of a basis with the standard Gram matrix, for any algebra
    carrying a non-degenerate alternating form."""
    F = A.field
    rows = []
    remaining = Subspace.full(F, A.dim)
    while remaining.dim:
        u = remaining.rows[0]
        v = None
        for w in remaining.rows[1:]:
            c = A.pairing(u, w)
            if c != F.zero():
                v = vec_scale(F, F.inv(c), w)
                break
        if v is None:
            raise ClassifyError("alternating form is degenerate")
        rows.extend([u, v])
        span = Subspace.span(F, A.dim, [u, v])
        remaining = remaining.intersect(span.perp(A.gram))
    return rows


def canonicalize(A):
    """(CanonicalForm, witness basis rows) for a dimension-10 nilpotent
    algebra with isotropic centre of dimension 2 or 4.

    The witness rows form a symplectic basis of A on which the
    multiplication table is exactly the canonical one.  Out-of-scope
    algebras (centre dimension 3 or 5, non-isotropic centre) give an
    OutOfScope form with no witness.
    """
    if A.dim != 10:
        raise ValueError("classification requires dimension 10")
    pre = None
    B = A
    if not B.is_standard_gram():
        pre = symplectic_basis(B)
        B = B.transport(pre)
    lcs = lower_central_series(B)
    if lcs[-1].dim != 0:
        raise ValueError("algebra is not nilpotent")
    Z = centre(B)
    if Z.dim not in (2, 4):
        return out_of_scope(A.field, "centre dimension %d" % Z.dim), None
    if not is_isotropic(B, Z):
        return out_of_scope(A.field, "centre is not isotropic"), None
    if Z.dim == 4:
        form, rows = _classify_centre4(B, lcs, Z)
    else:
        from .centre2 import classify_centre2
        form, rows = classify_centre2(B, lcs, Z)
    if pre is not None:
        rows = mat_mul(A.field, rows, pre)
    final = A.transport(rows)
    if final.presented_by() != presentation(form.tag, form.field,
                                            form.params):
        raise ClassifyError("witness does not transport onto the "
                            "canonical table")
    return form, rows


# ---------------------------------------------------------------------------
# centre dimension 4


def _classify_centre4(B, lcs, Z):
    L3 = lcs[2] if len(lcs) > 2 else Subspace.zero(B.field, B.dim)
    if L3.dim == 3:
        return _handle_p41(B, lcs, Z)
    if L3 != Z:
        raise ClassifyError("unexpected flag shape for centre dimension 4")
    kind = centre4_type(B)
    if kind.tag == "A":
        return _handle_type_a(B, lcs, Z, kind)
    if kind.tag == "B":
        return _handle_type_b(B, lcs, Z, kind)
    return _handle_type_c(B, lcs, Z)


def _handle_p41(B, lcs, Z):
    F = B.field
    one, zero = F.one(), F.zero()
    L2, L3 = lcs[1], lcs[2]
    if not (L3 <= Z and Z <= L2 and L2.dim == 6):
        raise ClassifyError("flag dimensions are off for this branch")
    Z2 = centralizer_of(B, Z)
    full = Subspace.full(F, B.dim)
    plan = [
        ("vec", xi(5), L3.rows[0]),
        ("vec", xi(4), L3.rows[1]),
        ("vec", xi(3), L3.rows[2]),
        ("in", xi(2), Z, L3),
        ("in", xi(1), L2, Z),
        ("in", yi(1), L2),
        ("in", yi(2), Z2),
        ("in", yi(3), full),
        ("in", yi(4), full),
        ("in", yi(5), full),
    ]
    chain = _Chain(B)
    chain.push(_frame(B, plan))

    qidx = (xi(2), xi(1), yi(1))   # coordinates spanning L^2 / L^3

    def qsolve(A, rhs_idx):
        """Coefficients expressing a coordinate vector over the classes of
        y3y4, y3y5, y4y5 in L^2/L^3."""
        p34 = A.table[yi(3)][yi(4)]
        p35 = A.table[yi(3)][yi(5)]
        p45 = A.table[yi(4)][yi(5)]
        M = [[p34[t], p35[t], p45[t]] for t in qidx]
        b = [one if t == rhs_idx else zero for t in qidx]
        sol = solve(F, M, b)
        if sol is None:
            raise ClassifyError("pair products do not span the quotient")
        return sol

    # stage 1: arrange y3y4 = x2 modulo the third term of the series
    al, be, ga = qsolve(chain.A, xi(2))
    if al == zero:
        swap = (4, 5) if be != zero else (3, 5)
        rows = [list(unit_vec(F, B.dim, t)) for t in range(B.dim)]
        i, j = swap
        rows[xi(i)], rows[xi(j)] = rows[xi(j)], rows[xi(i)]
        rows[yi(i)], rows[yi(j)] = rows[yi(j)], rows[yi(i)]
        chain.push(rows)
        al, be, ga = qsolve(chain.A, xi(2))
    if al == zero:
        raise ClassifyError("no pair permutation exposes the x2 class")
    N = [[one, zero, F.neg(F.div(ga, al))],
         [zero, al, be],
         [zero, zero, one]]
    chain.push(_rows_pair_block(chain.A, (3, 4, 5), N))

    # stage 2: arrange y4y5 = x1 modulo the same subspace
    al, be, ga = qsolve(chain.A, xi(1))
    if ga == zero:
        rows = [list(unit_vec(F, B.dim, t)) for t in range(B.dim)]
        rows[xi(1)] = list(unit_vec(F, B.dim, yi(1)))
        rows[yi(1)] = list(vec_scale(F, F.neg(one),
                                     unit_vec(F, B.dim, xi(1))))
        chain.push(rows)
        al, be, ga = qsolve(chain.A, xi(1))
    if ga == zero:
        raise ClassifyError("x1 class unreachable from the pair products")
    N = [[one, zero, zero],
         [F.div(be, ga), one, zero],
         [F.neg(al), zero, ga]]
    chain.push(_rows_pair_block(chain.A, (3, 4, 5), N))

    # stage 3: arrange y5y3 = y1 modulo the same subspace
    al, be, ga = qsolve(chain.A, yi(1))
    # y1 = -al*(y3y4) - be'*(y4y5) + ga'*(y5y3) with y5y3 = -y3y5
    s1, s2, s3 = al, be, ga
    ga = F.neg(s2)
    al = F.neg(s1)
    be = F.neg(s3)
    if ga == zero:
        raise ClassifyError("y1 class unreachable from the pair products")
    N = [[ga, be, zero],
         [zero, one, zero],
         [zero, F.div(al, ga), one]]
    chain.push(_rows_pair_block(chain.A, (3, 4, 5), N))
    chain.push(_rows_scale_pair(chain.A, 2, ga))

    # residual stage: exact equality up to central corrections
    def rows_fn(A, params):
        c1, c2, c3 = params
        return _rows_subst(A, {
            xi(2): [(one, xi(2)), (c1, xi(5))],
            yi(5): [(one, yi(5)), (F.neg(c1), yi(2))],
            xi(1): [(one, xi(1)), (c2, xi(3))],
            yi(3): [(one, yi(3)), (F.neg(c2), yi(1))],
            yi(1): [(one, yi(1)), (c3, xi(4))],
            yi(4): [(one, yi(4)), (c3, xi(1))],
        })

    def resid_fn(A):
        d34 = vec_sub(F, A.table[yi(3)][yi(4)], A.x(2))
        d45 = vec_sub(F, A.table[yi(4)][yi(5)], A.x(1))
        d53 = vec_sub(F, A.table[yi(5)][yi(3)], A.y(1))
        return (d34[xi(5)], d45[xi(3)], d53[xi(4)])

    _kill_affine(chain, rows_fn, resid_fn, 3)
    return _finish(chain, "P4_1")


# -- the phi form geometry --------------------------------------------------


class PhiForm:
    """The alternating form (z.u, v) on L/L^2 induced by a class of L^2
    modulo the centre, expressed over a fixed quotient basis."""

    def __init__(self, z, matrix, basis):
        self.z_class = tuple(z)
        self.matrix = tuple(map(tuple, matrix))
        self.basis = tuple(map(tuple, basis))

    def value(self, u, v):
        """Evaluate on quotient coordinate vectors."""
        F = self._field
        s = F.zero()
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                s = F.add(s, F.mul(F.mul(a, b), self.matrix[i][j]))
        return s

    def __repr__(self):
        return "PhiForm(%r)" % (self.matrix,)


class CentreDim4Type:
    """Tag A, B or C of a centre-dimension-4 algebra; for C the extracted
    parameter pair of the irreducible quadratic."""

    def __init__(self, tag, params=(), directions=()):
        self.tag = tag
        self.params = tuple(params)
        self.directions = tuple(directions)

    def __repr__(self):
        if self.tag == "C":
            return "CentreDim4Type(C, params=%r)" % (self.params,)
        return "CentreDim4Type(%s)" % self.tag


def _quotient_basis(A, L2):
    return L2.complement_basis()


def phi(A, z):
    """The PhiForm of a vector z of L^2 (centre dim 4, L^3 = centre)."""
    F = A.field
    lcs = lower_central_series(A)
    Z = centre(A)
    if Z.dim != 4 or len(lcs) < 3 or lcs[2] != Z:
        raise ValueError("phi needs centre dimension 4 with L^3 = Z(L)")
    L2 = lcs[1]
    if not L2.contains_vec(z):
        raise ValueError("phi argument must lie in L^2")
    qb = _quotient_basis(A, L2)
    M = [[A.pairing(A.product(z, u), v) for v in qb] for u in qb]
    form = PhiForm(z, M, qb)
    form._field = F
    return form


def _phi_matrix(A, z, qb):
    return [[A.pairing(A.product(z, u), v) for v in qb] for u in qb]


def _pfaffian4(F, M):
    t1 = F.mul(M[0][1], M[2][3])
    t2 = F.mul(M[0][2], M[1][3])
    t3 = F.mul(M[0][3], M[1][2])
    return F.add(F.sub(t1, t2), t3)


def _sqrt_fraction(q):
    import math
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    from fractions import Fraction
    return Fraction(rn, rd)


def _degenerate_directions(F, q20, q11, q02):
    """Projective roots (a, b) of q20*a^2 + q11*a*b + q02*b^2."""
    zero, one = F.zero(), F.one()
    if q20 == zero and q11 == zero and q02 == zero:
        raise ClassifyError("every direction of the pencil is degenerate")
    roots = []
    if F.is_finite:
        if q20 == zero:
            roots.append((one, zero))
        for a in F.elements():
            v = F.add(F.add(F.mul(q20, F.mul(a, a)), F.mul(q11, a)), q02)
            if v == zero:
                roots.append((a, one))
        return roots
    if q20 == zero:
        roots.append((one, zero))
        if q11 != zero:
            roots.append((F.div(F.neg(q02), q11), one))
        return roots
    disc = F.sub(F.mul(q11, q11),
                 F.mul(F.from_int(4), F.mul(q20, q02)))
    s = _sqrt_fraction(disc)
    if s is None:
        return roots
    two_a = F.mul(F.from_int(2), q20)
    r1 = F.div(F.sub(s, q11), two_a)
    roots.append((r1, one))
    if s != zero:
        r2 = F.div(F.sub(F.neg(s), q11), two_a)
        roots.append((r2, one))
    return roots


def centre4_type(A):
    """Type A, B or C by scanning degeneracy of the phi pencil."""
    F = A.field
    lcs = lower_central_series(A)
    Z = centre(A)
    if Z.dim != 4 or not is_isotropic(A, Z) or len(lcs) < 3 or lcs[2] != Z:
        raise ValueError("type scan needs an isotropic centre of dimension "
                         "4 with L^3 = Z(L)")
    L2 = lcs[1]
    z1, z2 = Z.complement_basis(inside=L2)
    qb = _quotient_basis(A, L2)
    M1 = _phi_matrix(A, z1, qb)
    M2 = _phi_matrix(A, z2, qb)
    Msum = [[F.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(M1, M2)]
    q20 = _pfaffian4(F, M1)
    q02 = _pfaffian4(F, M2)
    q11 = F.sub(F.sub(_pfaffian4(F, Msum), q20), q02)
    roots = _degenerate_directions(F, q20, q11, q02)
    dirs = [vec_add(F, vec_scale(F, a, z1), vec_scale(F, b, z2))
            for (a, b) in roots]
    if len(roots) >= 2:
        return CentreDim4Type("A", directions=dirs[:2])
    if len(roots) == 1:
        return CentreDim4Type("B", directions=dirs)
    x1v = z1
    y1v = _solve_in(A, L2, [(x1v, F.neg(F.one()))])
    _, alpha, beta = _c_quotient_frame(A, L2, x1v, y1v)
    return CentreDim4Type("C", params=(alpha, beta))


def _plane_through(F, Mx, My, u):
    """The common radical-slice plane through the quotient vector u."""
    rows = []
    for M in (Mx, My):
        rows.append([_fsum(F, (F.mul(M[i][j], u[j]) for j in range(4)))
                     for i in range(4)])
    ker = kernel_basis(F, rows)
    return Subspace.span(F, 4, ker)


def totally_isotropic_plane(A, u):
    """For a type-C algebra: the unique plane through the class of u that
    is isotropic for every form of the phi pencil."""
    F = A.field
    lcs = lower_central_series(A)
    Z = centre(A)
    L2 = lcs[1]
    if L2.contains_vec(u):
        raise ValueError("the vector must lie outside L^2")
    z1, z2 = Z.complement_basis(inside=L2)
    qb = _quotient_basis(A, L2)
    Mx = _phi_matrix(A, z1, qb)
    My = _phi_matrix(A, z2, qb)
    from .linalg import quotient_coords
    uq = quotient_coords(F, u, L2, qb)
    P = _plane_through(F, Mx, My, uq)
    if P.dim != 2:
        raise ClassifyError("isotropic plane has dimension %d" % P.dim)
    for M in (Mx, My):
        for p in P.rows:
            for q in P.rows:
                if _form_value(F, M, p, q) != F.zero():
                    raise ClassifyError("plane is not totally isotropic")
    return P


def _form_value(F, M, u, v):
    return _fsum(F, (F.mul(F.mul(u[i], v[j]), M[i][j])
                     for i in range(4) for j in range(4)))


def _solve_quotient(F, space, conditions):
    """Vector of `space` (ambient 4) satisfying linear (functional, value)
    conditions, each functional given as a length-4 covector."""
    rows = space.rows
    M = [[_fsum(F, (F.mul(r[i], fn[i]) for i in range(4)))
          for r in rows] for (fn, _) in conditions]
    b = [val for (_, val) in conditions]
    a = solve(F, M, b)
    if a is None:
        raise ClassifyError("quotient frame constraints are inconsistent")
    out = [F.zero()] * 4
    for c, r in zip(a, rows):
        for i in range(4):
            out[i] = F.add(out[i], F.mul(c, r[i]))
    return tuple(out)


def _apply_form(F, M, u):
    """Covector v -> phi(u, v)."""
    return [_fsum(F, (F.mul(u[i], M[i][j]) for i in range(4)))
            for j in range(4)]


def _c_quotient_frame(A, L2, x1v, y1v, y2q=None, auxq=None):
    """Quotient classes (y2..y5) normalized per the type-C geometry, plus
    the extracted (alpha, beta).

    y2q picks the class of y2 in quotient coordinates (default: the
    first quotient basis vector); auxq picks the point whose isotropic
    plane serves as the complement (default: the first unit vector
    outside the plane of y2)."""
    F = A.field
    one, zero = F.one(), F.zero()
    qb = _quotient_basis(A, L2)
    Mx = _phi_matrix(A, x1v, qb)
    My = _phi_matrix(A, y1v, qb)
    e1 = tuple(y2q) if y2q is not None else (one, zero, zero, zero)
    P1 = _plane_through(F, Mx, My, e1)
    if P1.dim != 2:
        raise ClassifyError("type C geometry broke down (plane 1)")
    P2 = None
    if auxq is not None:
        if P1.contains_vec(tuple(auxq)):
            raise ClassifyError("the complement point lies in the first "
                                "plane")
        P2 = _plane_through(F, Mx, My, tuple(auxq))
    else:
        for t in range(0, 4):
            e = tuple(one if i == t else zero for i in range(4))
            if not P1.contains_vec(e):
                P2 = _plane_through(F, Mx, My, e)
                break
    if P2 is None or P2.dim != 2 or P1.intersect(P2).dim != 0:
        raise ClassifyError("type C geometry broke down (plane 2)")
    y2 = e1
    y5 = _solve_quotient(F, P2, [(_apply_form(F, Mx, y2), zero),
                                 (_apply_form(F, My, y2), one)])
    y3 = _solve_quotient(F, P2, [(_apply_form(F, My, y2), zero),
                                 (_apply_form(F, Mx, y2), one)])
    y4 = _solve_quotient(F, P1, [(_apply_form(F, My, y5), zero),
                                 (_apply_form(F, My, y3), one)])
    # so that (y3 phi_y y4) = 1 with the arguments in that order
    alpha = _form_value(F, Mx, y3, y4)
    beta = _form_value(F, Mx, y4, y5)
    table = [
        (Mx, y2, y3, one), (Mx, y3, y4, alpha), (Mx, y4, y5, beta),
        (Mx, y2, y4, zero), (Mx, y2, y5, zero), (Mx, y3, y5, zero),
        (My, y2, y5, one), (My, y3, y4, one), (My, y2, y3, zero),
        (My, y2, y4, zero), (My, y4, y5, zero), (My, y3, y5, zero),
    ]
    for (M, u, v, want) in table:
        if _form_value(F, M, u, v) != want:
            raise ClassifyError("type C normalized value table is off")
    if len(rref(F, [list(y) for y in (y2, y3, y4, y5)])[0]) != 4:
        raise ClassifyError("type C quotient frame is degenerate")
    if not is_irreducible_quadratic(F, alpha, beta):
        raise ClassifyError("extracted quadratic is reducible")
    return {2: y2, 3: y3, 4: y4, 5: y5}, alpha, beta


def extract_c_params(A, x1v, y1v, y2q=None, auxq=None):
    """(alpha, beta) of a type-C algebra for the given symplectic pair of
    L^2 modulo the centre.

    The optional quotient vectors y2q and auxq override the default
    choices of the normalized class of y2 and of the complement plane;
    the extracted pair does not depend on them."""
    lcs = lower_central_series(A)
    _, alpha, beta = _c_quotient_frame(A, lcs[1], x1v, y1v,
                                       y2q=y2q, auxq=auxq)
    return alpha, beta


# -- lifting a quotient frame to a symplectic basis -------------------------


def _lift_frame(A, Z, L2, x1v, y1v, qb, yq):
    """Complete quotient classes y2..y5 to a full symplectic frame: fix
    representatives orthogonal to x1, y1, take dual x2..x5 in the centre,
    then orthogonalize the y's by central shifts."""
    F = A.field
    one, zero = F.one(), F.zero()
    ys = {}
    for i in range(2, 6):
        v = list(zeros_vec(F, A.dim))
        for c, b in zip(yq[i], qb):
            for t, x in enumerate(b):
                v[t] = F.add(v[t], F.mul(c, x))
        a = A.pairing(y1v, v)
        bco = F.neg(A.pairing(x1v, v))
        v = vec_add(F, v, vec_add(F, vec_scale(F, a, x1v),
                                  vec_scale(F, bco, y1v)))
        ys[i] = v
    xs = {}
    for i in range(2, 6):
        cons = [(ys[j], one if j == i else zero) for j in range(2, 6)]
        xs[i] = _solve_in(A, Z, cons)
    for i in range(2, 6):
        for j in range(i + 1, 6):
            c = A.pairing(ys[i], ys[j])
            if c != zero:
                ys[j] = vec_add(F, ys[j], vec_scale(F, c, xs[i]))
    rows = [x1v, y1v]
    for i in range(2, 6):
        rows.extend([xs[i], ys[i]])
    if not is_symplectic(A, rows):
        raise ClassifyError("lifted frame is not symplectic")
    return rows


def _c4_resid_rows(A, params):
    """Corrections y_i += a_i x1 + b_i y1 with the dual repairs on x1, y1;
    products with x1 and y1 are untouched because L^2 L^2 = 0."""
    F = A.field
    one = F.one()
    repl = {}
    x1_terms = [(one, xi(1))]
    y1_terms = [(one, yi(1))]
    for i in range(2, 6):
        a = params[2 * (i - 2)]
        b = params[2 * (i - 2) + 1]
        repl[yi(i)] = [(one, yi(i)), (a, xi(1)), (b, yi(1))]
        x1_terms.append((F.neg(b), xi(i)))
        y1_terms.append((a, xi(i)))
    repl[xi(1)] = x1_terms
    repl[yi(1)] = y1_terms
    rows = _rows_subst(A, repl)
    # the shifted y's pair among themselves (a_i*b_j - a_j*b_i); repair
    # with central x shifts, which touch neither products nor residuals
    for i in range(2, 6):
        for j in range(i + 1, 6):
            p = A.pairing(rows[yi(i)], rows[yi(j)])
            if p != A.field.zero():
                rows[yi(j)] = list(vec_add(F, rows[yi(j)],
                                           vec_scale(F, p, rows[xi(i)])))
    return rows


def _c4_resid_fn(A):
    return (_tyyy(A, 2, 3, 4), _tyyy(A, 2, 3, 5),
            _tyyy(A, 2, 4, 5), _tyyy(A, 3, 4, 5))


def _push_lift_and_kill(B, Z, L2, x1v, y1v, qb, yq, tag, params=()):
    chain = _Chain(B)
    chain.push(_lift_frame(B, Z, L2, x1v, y1v, qb, yq))
    _kill_affine(chain, _c4_resid_rows, _c4_resid_fn, 8)
    return _finish(chain, tag, params)


def _handle_type_a(B, lcs, Z, kind):
    F = B.field
    L2 = lcs[1]
    d1, d2 = kind.directions
    c = B.pairing(d1, d2)
    if c == F.zero():
        raise ClassifyError("degenerate directions pair to zero")
    x1v = d1
    y1v = vec_scale(F, F.inv(c), d2)
    qb = _quotient_basis(B, L2)
    Mx = _phi_matrix(B, x1v, qb)
    My = _phi_matrix(B, y1v, qb)
    radx = Subspace.span(F, 4, kernel_basis(F, Mx))
    rady = Subspace.span(F, 4, kernel_basis(F, My))
    if radx.dim != 2 or rady.dim != 2:
        raise ClassifyError("degenerate forms have the wrong radical")
    y4, y5 = radx.rows
    y2, y3 = rady.rows
    v = _form_value(F, Mx, y2, y3)
    if v == F.zero():
        raise ClassifyError("radical frame value vanished")
    y3 = tuple(F.div(t, v) for t in y3)
    w = _form_value(F, My, y4, y5)
    if w == F.zero():
        raise ClassifyError("radical frame value vanished")
    y5 = tuple(F.div(t, w) for t in y5)
    yq = {2: y2, 3: y3, 4: y4, 5: y5}
    return _push_lift_and_kill(B, Z, L2, x1v, y1v, qb, yq, "P4_2")


def _handle_type_b(B, lcs, Z, kind):
    F = B.field
    one, zero = F.one(), F.zero()
    L2 = lcs[1]
    x1v = kind.directions[0]
    y1v = _solve_in(B, L2, [(x1v, F.neg(one))])
    qb = _quotient_basis(B, L2)
    Mx = _phi_matrix(B, x1v, qb)
    My = _phi_matrix(B, y1v, qb)
    radx = Subspace.span(F, 4, kernel_basis(F, Mx))
    if radx.dim != 2:
        raise ClassifyError("type B radical has the wrong dimension")
    y4, y5 = radx.rows
    if _form_value(F, My, y4, y5) != zero:
        raise ClassifyError("type B radical is not isotropic for the dual "
                            "form")
    full4 = Subspace.full(F, 4)
    y2 = _solve_quotient(F, full4, [(_apply_form(F, My, y4), F.neg(one))])
    a = F.neg(_form_value(F, My, y2, y5))
    y5 = tuple(F.add(p, F.mul(a, q)) for p, q in zip(y5, y4))
    span3 = Subspace.span(F, 4, [y2, y4, y5])
    y3 = None
    for t in range(4):
        e = tuple(one if i == t else zero for i in range(4))
        if not span3.contains_vec(e):
            y3 = e
            break
    if y3 is None:
        raise ClassifyError("quotient basis completion failed")
    bco = F.neg(_form_value(F, My, y2, y3))
    y3 = tuple(F.add(p, F.mul(bco, q)) for p, q in zip(y3, y4))
    g = F.neg(_form_value(F, My, y3, y4))
    y3 = tuple(F.add(p, F.mul(g, q)) for p, q in zip(y3, y2))
    v = _form_value(F, Mx, y2, y3)
    if v == zero:
        raise ClassifyError("type B frame value vanished")
    y3 = tuple(F.div(t, v) for t in y3)
    w = _form_value(F, My, y3, y5)
    if w == zero:
        raise ClassifyError("type B frame value vanished")
    y5 = tuple(F.div(t, w) for t in y5)
    yq = {2: y2, 3: y3, 4: y4, 5: y5}
    return _push_lift_and_kill(B, Z, L2, x1v, y1v, qb, yq, "P4_3")


def _fourth_root_char2(F, a):
    """The unique fourth root in characteristic 2 (Frobenius is bijective)."""
    s = a
    for _ in range(2):
        # square root: x -> x^(q/2)
        s = F.pow(s, F.order // 2)
    return s


def _handle_type_c(B, lcs, Z):
    F = B.field
    L2 = lcs[1]
    z1, z2 = Z.complement_basis(inside=L2)
    x1v = z1
    y1v = _solve_in(B, L2, [(x1v, F.neg(F.one()))])
    yq, alpha, beta = _c_quotient_frame(B, L2, x1v, y1v)
    if F.char == 2 and F.is_finite and beta != F.one():
        # rescale the pair so the constant term becomes 1; possible since
        # fourth powers are all of the field here
        a = _fourth_root_char2(F, F.inv(beta))
        x1v = vec_scale(F, a, x1v)
        y1v = vec_scale(F, F.inv(a), y1v)
        yq, alpha, beta = _c_quotient_frame(B, L2, x1v, y1v)
        if beta != F.one():
            raise ClassifyError("characteristic 2 rescaling failed")
    qb = _quotient_basis(B, L2)
    return _push_lift_and_kill(B, Z, L2, x1v, y1v, qb, yq, "P4_4",
                               (alpha, beta))
