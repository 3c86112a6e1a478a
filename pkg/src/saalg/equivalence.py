"""Isomorphism testing between canonical presentations.

Two layers live here.  The fast layer decides equivalence of family
parameters: the power-coset criterion for the scaled families P2_2,
P2_4, P2_5, P2_6 and the SL2 / norm-group criterion for the quadratic
parameter pair of P4_4.  The slow layer, brute_force_iso, is a dumb
generator-image search over tiny prime fields used as an independent
oracle against the fast verdicts.
"""

from fractions import Fraction

import sympy

from .core import expand, xi, yi
from .families import FamilyError, POWER_EXPONENT, presentation
from .field import (FieldError, is_irreducible_quadratic, kth_powers,
                    kth_root, power_coset_index, same_power_coset)
from .linalg import Subspace, unit_vec, vec_scale
from .structure import centre, lower_central_series


class EquivDecision:
    """Outcome of an equivalence test.

    equal is True, False or None (undecided, only over the rationals).
    witness carries the data that certifies a positive answer: an SL2
    quadruple (a, b, c, d) for the quadratic family, a scaling unit for
    the power-coset families.  criterion names the rule that decided.
    """

    def __init__(self, equal, witness, criterion):
        self.equal = equal
        self.witness = witness
        self.criterion = criterion

    def __bool__(self):
        if self.equal is None:
            raise ValueError("undecided equivalence has no truth value")
        return self.equal

    def __repr__(self):
        tag = {True: "equal", False: "not equal", None: "undecided"}
        return "EquivDecision(%s; %s)" % (tag[self.equal], self.criterion)


class GBeta:
    """The norm-square group {(a^2 + b^2*beta)^2 : (a,b) != (0,0)}.

    Only enumerable over finite fields.  It is a subgroup of the squares
    of F* and governs equivalence of P4_4(0, beta) presentations in odd
    characteristic.
    """

    def __init__(self, field, beta):
        if not field.is_finite:
            raise FieldError("the norm-square group of an infinite field "
                             "is not finitely enumerable")
        self.field = field
        self.beta = beta
        zero = field.zero()
        elems = set()
        for a in field.elements():
            for b in field.elements():
                if a == zero and b == zero:
                    continue
                v = field.add(field.mul(a, a),
                              field.mul(field.mul(b, b), beta))
                if v != zero:
                    elems.add(field.mul(v, v))
        self.elements = frozenset(elems)

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)


def _c_image(field, alpha, beta, a, b, c, d):
    """(alpha~, beta~) reached from (alpha, beta) by the SL2 quadruple,
    or None when the change of basis degenerates."""
    F = field
    two = F.from_int(2)
    den = F.add(F.mul(d, d),
                F.add(F.mul(alpha, F.mul(c, d)),
                      F.mul(F.mul(c, c), beta)))
    if den == F.zero():
        return None
    na = F.add(F.mul(F.add(F.mul(a, d), F.mul(b, c)), alpha),
               F.add(F.mul(two, F.mul(F.mul(a, c), beta)),
                     F.mul(two, F.mul(b, d))))
    nb = F.add(F.mul(b, b),
               F.add(F.mul(F.mul(a, b), alpha),
                     F.mul(F.mul(a, a), beta)))
    return F.div(na, den), F.div(nb, den)


def _sl2(field):
    """All (a, b, c, d) with ad - bc = 1 over a finite field."""
    elems = list(field.elements())
    zero = field.zero()
    one = field.one()
    for a in elems:
        for c in elems:
            if a == zero and c == zero:
                continue
            if a != zero:
                ia = field.inv(a)
                for b in elems:
                    d = field.mul(ia, field.add(one, field.mul(b, c)))
                    yield a, b, c, d
            else:
                b = field.neg(field.inv(c))
                for d in elems:
                    yield a, b, c, d


def _check_c_pair(field, pair, who):
    alpha, beta = pair
    if not is_irreducible_quadratic(field, alpha, beta):
        raise FamilyError("%s parameter pair (%s, %s) is reducible over %s"
                          % (who, field.fmt(alpha), field.fmt(beta),
                             field.spec()))


def _search_sl2(field, p1, p2):
    alpha, beta = p1
    for (a, b, c, d) in _sl2(field):
        if _c_image(field, alpha, beta, a, b, c, d) == p2:
            return EquivDecision(True, (a, b, c, d), "SL2 search")
    return EquivDecision(False, None, "exhausted SL2 search")


def _norm_criterion(field, p1, p2):
    """Odd characteristic, alpha = alpha~ = 0: membership of beta~/beta
    in the norm-square group, with an SL2 witness reconstructed."""
    beta, nbeta = p1[1], p2[1]
    ratio = field.div(nbeta, beta)
    if ratio not in GBeta(field, beta):
        return EquivDecision(False, None, "norm-square group membership")
    zero = field.zero()
    for a in field.elements():
        for b in field.elements():
            if a == zero and b == zero:
                continue
            v = field.add(field.mul(a, a),
                          field.mul(field.mul(b, b), beta))
            if field.mul(v, v) != ratio:
                continue
            for quad in _sl2_from_norm_pair(field, beta, a, b):
                if _c_image(field, p1[0], beta, *quad) == p2:
                    return EquivDecision(True, quad,
                                         "norm-square group membership")
    # membership said yes but no witness assembled: fall back on search
    return _search_sl2(field, p1, p2)


def _sl2_from_norm_pair(field, beta, a, b):
    """SL2 quadruples induced by a norm pair (a, b): the change of basis
    carrying (0, beta) to (0, (a^2 + b^2*beta)^2 * beta).

    Solving ad - bc = 1 together with ac*beta + bd = 0 forces
    c = -B/(A^2*beta + B^2), d = A*beta/(A^2*beta + B^2) for the pair
    (A, B) = (a, b*beta), whose rescaled norm A^2 + B^2/beta equals
    a^2 + b^2*beta."""
    zero = field.zero()
    A, B = a, field.mul(b, beta)
    if B == zero:
        return [(A, zero, zero, field.inv(A))]
    nrm = field.add(field.mul(field.mul(A, A), beta), field.mul(B, B))
    if nrm == zero:
        return []
    c = field.neg(field.div(B, nrm))
    d = field.div(field.mul(A, beta), nrm)
    return [(A, B, c, d)]


def _rational_square_root(q):
    if q <= 0:
        return None
    num, ok1 = sympy.integer_nthroot(q.numerator, 2)
    den, ok2 = sympy.integer_nthroot(q.denominator, 2)
    if ok1 and ok2:
        return Fraction(int(num), int(den))
    return None


def _norm_point(beta, s):
    """A rational point (a, b) with a^2 + b^2*beta = s, or None.

    Decided through the ternary quadratic a^2 + beta*b^2 - s*c^2 = 0,
    which has a nontrivial rational zero iff s is a norm of the
    quadratic extension attached to beta."""
    x, y, z = sympy.symbols("x y z", integer=True)
    bn, bd = beta.numerator, beta.denominator
    sn, sd = s.numerator, s.denominator
    # clear denominators: bd*sd*x^2 + bn*sd*y^2 - sn*bd*z^2 = 0
    eq = bd * sd * x ** 2 + bn * sd * y ** 2 - sn * bd * z ** 2
    try:
        sols = sympy.diophantine(eq)
    except (NotImplementedError, TypeError):
        return "unknown", None
    nontrivial = False
    for sol in sols:
        sx, sy, sz = (sympy.S(v) for v in sol)
        free = sorted(sx.free_symbols | sy.free_symbols | sz.free_symbols,
                      key=str)
        trials = [()] if not free else [
            vals for vals in _small_tuples(len(free))]
        for vals in trials:
            sub = dict(zip(free, vals))
            try:
                vx, vy, vz = (int(sx.subs(sub)), int(sy.subs(sub)),
                              int(sz.subs(sub)))
            except TypeError:
                continue
            if (vx, vy, vz) != (0, 0, 0):
                nontrivial = True
            if vz != 0:
                a, b = Fraction(vx, vz), Fraction(vy, vz)
                if a * a + b * b * beta == s:
                    return "point", (a, b)
    # an empty solution set is a proof of unsolvability; a parametric
    # family our sampling failed to pin down is not
    return ("unknown" if nontrivial else "none"), None


def _small_tuples(n, bound=4):
    vals = [v for k in range(1, bound + 1) for v in (k, -k)]
    if n == 1:
        return [(v,) for v in vals]
    return [(v, w) for v in vals for w in vals]


def _equiv_c_rationals(field, p1, p2):
    zero = field.zero()
    if p1[0] != zero or p2[0] != zero:
        return EquivDecision(None, None, "undecided over the rationals "
                             "(nonzero linear coefficient)")
    beta, nbeta = p1[1], p2[1]
    ratio = nbeta / beta
    s = _rational_square_root(ratio)
    if s is None:
        return EquivDecision(False, None,
                             "parameter ratio is not a rational square")
    certain = True
    for sign in (s, -s):
        status, pt = _norm_point(beta, sign)
        if status == "unknown":
            certain = False
        if status != "point":
            continue
        a, b = pt
        for quad in _sl2_from_norm_pair(field, beta, a, b):
            if _c_image(field, zero, beta, *quad) == p2:
                return EquivDecision(True, quad, "rational norm equation")
        certain = False
    if certain:
        # the ternary quadratic solver is complete: no norm point exists
        return EquivDecision(False, None, "rational norm equation unsolvable")
    return EquivDecision(None, None, "undecided over the rationals "
                         "(norm equation not certified)")


def equiv_c(p1, p2, field, method="auto"):
    """Equivalence of two P4_4 parameter pairs over the same field.

    method: "auto" picks the norm criterion when it applies, otherwise
    the exhaustive SL2 search over finite fields; "search" and "norm"
    force a path (for cross-checking).  Over the rationals only the
    zero-linear-coefficient case is decided; the rest is reported as
    undecided, never wrongly.
    """
    p1, p2 = tuple(p1), tuple(p2)
    _check_c_pair(field, p1, "first")
    _check_c_pair(field, p2, "second")
    zero, one = field.zero(), field.one()
    if p1 == p2:
        return EquivDecision(True, (one, zero, zero, one), "identity")
    norm_ok = (field.char != 2 and p1[0] == zero and p2[0] == zero
               and field.is_finite)
    if method == "norm":
        if not norm_ok:
            raise FamilyError("the norm criterion needs odd characteristic, "
                              "zero linear coefficients and a finite field")
        return _norm_criterion(field, p1, p2)
    if method == "search":
        if not field.is_finite:
            raise FieldError("SL2 search needs a finite field")
        return _search_sl2(field, p1, p2)
    if method != "auto":
        raise ValueError("unknown method %r" % (method,))
    if not field.is_finite:
        return _equiv_c_rationals(field, p1, p2)
    if norm_ok:
        return _norm_criterion(field, p1, p2)
    return _search_sl2(field, p1, p2)


# -- scaled families: the power-coset criterion -----------------------------


def _power_family(family):
    if family not in POWER_EXPONENT:
        raise FamilyError("%s carries no scaling parameter" % (family,))
    return POWER_EXPONENT[family]


def _rational_kth_root(q, k):
    neg = q < 0
    if neg and k % 2 == 0:
        return None
    num, ok1 = sympy.integer_nthroot(abs(q.numerator), k)
    den, ok2 = sympy.integer_nthroot(q.denominator, k)
    if not (ok1 and ok2):
        return None
    r = Fraction(int(num), int(den))
    return -r if neg else r


def _scaling_unit(field, r, s, k):
    """u with u^k = s/r, or None."""
    q = field.div(s, r)
    if field.is_finite:
        return kth_root(field, q, k)
    return _rational_kth_root(q, k)


def equiv_r(family, r, s, field):
    """Power-coset equivalence for the scaled families."""
    k = _power_family(family)
    if r == field.zero() or s == field.zero():
        raise FamilyError("%s parameters must be nonzero" % (family,))
    if not same_power_coset(field, r, s, k):
        return EquivDecision(False, None,
                             "parameter ratio outside (F*)^%d" % k)
    u = _scaling_unit(field, r, s, k)
    if u is None:
        raise FieldError("coset test passed but no %d-th root found" % k)
    return EquivDecision(True, u, "power coset (F*)^%d" % k)


# exponent patterns of the diagonal basis change x_i -> u^e_i x_i,
# y_i -> u^-e_i y_i carrying the presentation with parameter r to the
# one with parameter u^k r
_DIAG_EXPONENTS = {
    "P2_2": (1, -2, 1, 0, -3),
    "P2_4": (1, 3, 5, -4, -2),
    "P2_5": (0, 1, -1, 0, -1),
    "P2_6": (-1, 4, -3, 2, -5),
}


def _diag_rows(field, unit, exps):
    rows = []
    for i, e in enumerate(exps, start=1):
        ue = field.pow(unit, e) if e >= 0 else field.inv(field.pow(unit, -e))
        iue = field.inv(ue)
        rows.append(list(vec_scale(field, ue, unit_vec(field, 10, xi(i)))))
        rows.append(list(vec_scale(field, iue, unit_vec(field, 10, yi(i)))))
    return rows


def iso_witness(family, r, s, field):
    """Explicit 10x10 basis change carrying the family presentation with
    parameter r to the one with parameter s, verified by exact transport.

    Raises when s/r is not a k-th power for the family's exponent k."""
    k = _power_family(family)
    if r == field.zero() or s == field.zero():
        raise FamilyError("%s parameters must be nonzero" % (family,))
    u = _scaling_unit(field, r, s, k)
    if u is None:
        raise FamilyError("parameters sit in different power cosets")
    rows = _diag_rows(field, u, _DIAG_EXPONENTS[family])
    A = expand(presentation(family, field, (r,)))
    got = A.transport(rows).presented_by()
    want = presentation(family, field, (s,))
    if got != want:
        raise AssertionError("diagonal witness failed to transport the table")
    return rows


def necessity_check(family, r, s, field):
    """Re-derive the coset criterion by enumerating the scaling ansatz.

    Transports the presentation with parameter r by every diagonal basis
    change of the family's exponent pattern, collects the reachable
    parameters, and confirms that set is exactly the coset r*(F*)^k and
    that membership of s in it matches the fast verdict."""
    k = _power_family(family)
    if not field.is_finite:
        raise FieldError("necessity enumeration needs a finite field")
    if r == field.zero() or s == field.zero():
        raise FamilyError("%s parameters must be nonzero" % (family,))
    A = expand(presentation(family, field, (r,)))
    exps = _DIAG_EXPONENTS[family]
    reachable = set()
    for u in field.units():
        P = A.transport(_diag_rows(field, u, exps)).presented_by()
        if P is None:
            return False
        cand = _read_scale_param(family, field, P)
        if cand is None:
            return False
        reachable.add(cand)
    coset = {field.mul(r, t) for t in kth_powers(field, k)}
    if reachable != coset:
        return False
    return (s in reachable) == same_power_coset(field, r, s, k)


_SCALE_TRIPLE = {
    "P2_2": ("xyy", 3, 4, 5),
    "P2_4": ("xyy", 3, 4, 5),
    "P2_5": ("xyy", 2, 3, 5),
    "P2_6": ("xyy", 2, 3, 5),
}


def _read_scale_param(family, field, pres):
    cand = pres.triples.get(_SCALE_TRIPLE[family])
    if cand is None or cand == field.zero():
        return None
    if pres != presentation(family, field, (cand,)):
        return None
    return cand


def count_classes(family, field):
    """Number of isomorphism classes inside one family over a finite
    field."""
    if not field.is_finite:
        raise FieldError("class counting needs a finite field")
    if family in POWER_EXPONENT:
        return power_coset_index(field, POWER_EXPONENT[family])
    if family == "P4_4":
        n = 1
        if field.order <= 9 and c_orbit_count(field) != n:
            raise AssertionError("orbit enumeration disagrees with the "
                                 "single-class rule")
        return n
    # the remaining families are parameter-free
    presentation(family, field)
    return 1


def c_orbit_count(field):
    """Number of P4_4 parameter orbits by exhaustive enumeration."""
    if not field.is_finite:
        raise FieldError("orbit enumeration needs a finite field")
    reps = []
    for alpha in field.elements():
        for beta in field.elements():
            if not is_irreducible_quadratic(field, alpha, beta):
                continue
            pair = (alpha, beta)
            if not any(equiv_c(rep, pair, field).equal for rep in reps):
                reps.append(pair)
    return len(reps)


# -- the brute-force oracle -------------------------------------------------


def _generation_scheme(A):
    """Greedy product basis grown from a generating pair.

    Returns (elements, steps, coords, gram) where elements[0:2] span a
    complement of L^2, steps[t] = (i, j) says elements[t+2] is the
    product elements[i]*elements[j], coords gives every pairwise product
    in the element basis, and gram is the pairing table."""
    F = A.field
    L2 = lower_central_series(A)[1]
    gens = L2.complement_basis()
    if len(gens) != 2:
        raise ValueError("oracle out of range: the algebra is not "
                         "generated by two elements")
    E = [tuple(g) for g in gens]
    span = Subspace.span(F, A.dim, E)
    steps = []
    grew = True
    while span.dim < A.dim and grew:
        grew = False
        for i in range(len(E)):
            for j in range(i + 1, len(E)):
                p = A.product(E[i], E[j])
                if not span.contains_vec(p):
                    steps.append((i, j))
                    E.append(p)
                    span = Subspace.span(F, A.dim, E)
                    grew = True
                    break
            if grew:
                break
    if span.dim != A.dim:
        raise ValueError("oracle out of range: generators do not span")
    coords = {}
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            c = _coords_in(F, E, A.product(E[i], E[j]))
            if c is None:
                raise ValueError("oracle out of range: product escaped "
                                 "the generated basis")
            coords[(i, j)] = c
    gram = [[A.pairing(E[i], E[j]) for j in range(A.dim)]
            for i in range(A.dim)]
    return E, steps, coords, gram


def _coords_in(F, basis, v):
    from .linalg import solve, transpose
    cols = [list(b) for b in basis]
    return solve(F, transpose(cols), list(v))


def _int_mat(field, rows):
    return [[field.sort_key(x) for x in row] for row in rows]


def brute_force_iso(A, B):
    """Independent isomorphism oracle over GF(2) and GF(3).

    Searches every pair of generator images, replays the product basis
    of A inside B, and checks product and pairing preservation plus
    bijectivity.  Restricted to two-generated algebras with centre of
    dimension 2 over the two smallest prime fields."""
    import numpy as np

    F = A.field
    if F != B.field:
        raise ValueError("oracle out of range: mixed fields")
    if F.order not in (2, 3) or F.order != F.char:
        raise ValueError("oracle out of range: only GF(2) and GF(3)")
    for L in (A, B):
        if L.dim != 10:
            raise ValueError("oracle out of range: dimension %d" % L.dim)
        if centre(L).dim != 2:
            raise ValueError("oracle out of range: centre dimension %d"
                             % centre(L).dim)
    p = F.order
    E, steps, coords, gramA = _generation_scheme(A)
    dim = A.dim
    gram_i = np.array(_int_mat(F, gramA), dtype=np.int64)
    coords_i = {k: np.array([F.sort_key(x) for x in v], dtype=np.int64)
                for k, v in coords.items()}

    # sparse product table of B: (s, t, k, c) with both orders resolved
    tabB = []
    zero = F.zero()
    for s in range(dim):
        for t in range(dim):
            for k, c in enumerate(B.table[s][t]):
                if c != zero:
                    tabB.append((s, t, k, F.sort_key(c)))
    JB = np.array(_int_mat(F, B.gram), dtype=np.int64)

    # quotient map onto a complement of L^2(B), for the generation prune
    L2B = lower_central_series(B)[1]
    compB = L2B.complement_basis()
    if len(compB) != 2:
        raise ValueError("oracle out of range: the algebra is not "
                         "generated by two elements")
    projB = _quotient_projection(F, L2B, compB)
    projB_i = np.array(_int_mat(F, projB), dtype=np.int64)

    a_codes = _vector_block(p, dim)
    # favour B's own generators early so positive queries exit fast
    prio = np.zeros(len(a_codes), dtype=np.int64)
    for g in compB:
        gi = np.array([F.sort_key(x) for x in g], dtype=np.int64)
        prio -= (a_codes == gi).all(axis=1).astype(np.int64)
    a_codes = a_codes[np.argsort(prio, kind="stable")]
    b_codes = _vector_block(p, dim)

    chunk = max(1, (1 << 16) // len(b_codes))
    for start in range(0, len(a_codes), chunk):
        if _scan_block(np, p, a_codes[start:start + chunk], b_codes,
                       steps, coords_i, gram_i, tabB, JB, projB_i, dim):
            return True
    return False


def _quotient_projection(F, L2, comp):
    """Rows of the linear map picking quotient coordinates along comp."""
    from .linalg import mat_inv, transpose
    basis = [list(c) for c in comp] + [list(r) for r in L2.rows]
    Minv = mat_inv(F, basis)
    # with basis vectors as rows, the coordinate functionals are the
    # columns of the inverse; the first two belong to comp
    return [[Minv[j][i] for j in range(len(basis))] for i in range(2)]


def _vector_block(p, dim):
    import numpy as np
    codes = np.arange(p ** dim, dtype=np.int64)
    cols = []
    for i in range(dim):
        cols.append((codes // (p ** i)) % p)
    return np.stack(cols, axis=1)


def _batched_product(np, p, tabB, U, V):
    out = np.zeros_like(U)
    for (s, t, k, c) in tabB:
        out[:, k] += c * U[:, s] * V[:, t]
    return out % p


def _scan_block(np, p, a_block, b_codes, steps, coords_i, gram_i,
                tabB, JB, projB_i, dim):
    na, nb = len(a_block), len(b_codes)
    U = np.repeat(a_block, nb, axis=0)
    V = np.tile(b_codes, (na, 1))

    # generation prune: images must be independent modulo L^2
    qa = (U @ projB_i.T) % p
    qb = (V @ projB_i.T) % p
    mask = (qa[:, 0] * qb[:, 1] - qa[:, 1] * qb[:, 0]) % p != 0
    U, V = U[mask], V[mask]
    if not len(U):
        return False

    imgs = [U, V]
    checked = set()

    def pairings_ok(imgs):
        """Form constraints among built images, pruning in place."""
        alive = np.ones(len(imgs[0]), dtype=bool)
        t = len(imgs) - 1
        left = (imgs[t] @ JB) % p
        for m in range(t):
            got = (left * imgs[m]).sum(axis=1) % p
            alive &= got == gram_i[t][m]
        return alive

    alive = pairings_ok(imgs)
    imgs = [im[alive] for im in imgs]
    if not len(imgs[0]):
        return False

    for (i, j) in steps:
        imgs.append(_batched_product(np, p, tabB, imgs[i], imgs[j]))
        checked.add((i, j))
        alive = pairings_ok(imgs)
        if not alive.all():
            imgs = [im[alive] for im in imgs]
        if not len(imgs[0]):
            return False

    # all ten images exist: check every remaining product constraint
    for (i, j), cvec in coords_i.items():
        if (i, j) in checked:
            continue
        got = _batched_product(np, p, tabB, imgs[i], imgs[j])
        want = np.zeros_like(got)
        for k in range(dim):
            if cvec[k]:
                want += cvec[k] * imgs[k]
        alive = (got % p == want % p).all(axis=1)
        imgs = [im[alive] for im in imgs]
        if not len(imgs[0]):
            return False

    # survivors satisfy every bilinear identity; demand bijectivity
    for idx in range(len(imgs[0])):
        M = np.stack([im[idx] for im in imgs], axis=0)
        if _rank_mod_p(np, M.copy(), p) == dim:
            return True
    return False


def _rank_mod_p(np, M, p):
    n, m = M.shape
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if M[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r][c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        for i in range(n):
            if i != r and M[i][c]:
                M[i] = (M[i] - M[i][c] * M[r]) % p
        r += 1
        if r == n:
            break
    return r
