"""Structural invariants: subspace products, central series, centre,
nilpotency class, isotropy, and the maximal-class criterion."""

from .linalg import Subspace, kernel_basis
from .core import xi, yi


def product_space(A, U, V):
    """Span of {u.v : u in basis(U), v in basis(V)}; bilinearity makes
    basis products enough."""
    vecs = [A.product(u, v) for u in U.rows for v in V.rows]
    return Subspace.span(A.field, A.dim, vecs)


def full_space(A):
    return Subspace.full(A.field, A.dim)


def lower_central_series(A, max_steps=None):
    """[L, L^2, L^3, ...] down to the first repeated term.  Ends with the
    zero space exactly when the algebra is nilpotent."""
    if max_steps is None:
        max_steps = A.dim + 1
    L = full_space(A)
    series = [L]
    for _ in range(max_steps):
        nxt = product_space(A, series[-1], L)
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def is_nilpotent(A):
    return lower_central_series(A)[-1].dim == 0


def nilpotency_class(A):
    series = lower_central_series(A)
    if series[-1].dim != 0:
        return None
    return len(series) - 1


def centre(A):
    """Z(L) = {x : x.L = 0}, via one kernel computation: stack the maps
    x -> x.e_b for all basis vectors e_b."""
    F = A.field
    cols = []
    for a in range(A.dim):
        col = []
        for b in range(A.dim):
            col.extend(A.table[a][b])
        cols.append(col)
    # rows of the big matrix: one per (b, coordinate) pair; unknowns are
    # the coefficients of x over the basis
    M = [[cols[a][t] for a in range(A.dim)]
         for t in range(A.dim * A.dim)]
    return Subspace.span(F, A.dim, kernel_basis(F, M))


def centralizer_of(A, S):
    """{x : x.L <= S} for a subspace S.

    Constraints: for each basis e_b the residue of x.e_b mod S vanishes;
    x.e_b is linear in x with coefficient vectors table[a][b]."""
    F = A.field
    M = []
    for b in range(A.dim):
        reduced = [S.reduce_vec(A.table[a][b]) for a in range(A.dim)]
        for t in range(A.dim):
            M.append([reduced[a][t] for a in range(A.dim)])
    return Subspace.span(F, A.dim, kernel_basis(F, M))


def upper_central_series(A):
    """[0, Z(L), Z_2(L), ...] up to the first repeated term."""
    series = [Subspace.zero(A.field, A.dim)]
    while True:
        nxt = centralizer_of(A, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.dim == A.dim:
            break
    return series


def is_isotropic(A, S):
    zero = A.field.zero()
    return all(A.pairing(u, v) == zero for u in S.rows for v in S.rows)


def is_maximal_class(A):
    """For an algebra of dimension 2n >= 8 on a standard presentation
    basis: maximal class iff x_i.y_{i+1} != 0 for i = 2..n-2 and
    x_1.y_2, y_1.y_2 are linearly independent."""
    from .linalg import rref
    F, n = A.field, A.n
    if A.dim < 8:
        raise ValueError("criterion needs dimension >= 8")
    for i in range(2, n - 1):
        if all(c == F.zero() for c in A.table[xi(i)][yi(i + 1)]):
            return False
    pair = [list(A.table[xi(1)][yi(2)]), list(A.table[yi(1)][yi(2)])]
    return len(rref(F, pair)[0]) == 2


class StructureReport:
    """Dimensions of both central series plus the headline invariants."""

    def __init__(self, A):
        self.lower = lower_central_series(A)
        self.upper = upper_central_series(A)
        self.lower_dims = [s.dim for s in self.lower]
        self.upper_dims = [s.dim for s in self.upper]
        self.nilpotent = self.lower[-1].dim == 0
        self.cls = len(self.lower) - 1 if self.nilpotent else None
        self.centre = self.upper[1] if len(self.upper) > 1 else self.upper[0]
        self.centre_dim = self.centre.dim
        self.centre_isotropic = is_isotropic(A, self.centre)

    def lines(self):
        out = []
        out.append("nilpotent: %s" % ("yes" if self.nilpotent else "no"))
        if self.cls is not None:
            out.append("class: %d" % self.cls)
        out.append("lower central dims: %s"
                   % " ".join(map(str, self.lower_dims
                                  + ([] if self.nilpotent else ["..."]))))
        out.append("upper central dims: %s" % " ".join(map(str,
                                                           self.upper_dims)))
        out.append("centre dim: %d (%sisotropic)"
                   % (self.centre_dim,
                      "" if self.centre_isotropic else "not "))
        return out

    def __repr__(self):
        return "StructureReport(class=%s, centre_dim=%d)" % (
            self.cls, self.centre_dim)


def structure_report(A):
    return StructureReport(A)
