"""Exact dense linear algebra over a Field: matrices, subspaces, perps.

Everything is tiny (ambient dimension 10), so all routines are plain
Gaussian elimination with exact arithmetic and echelon-canonical output.
"""


class LinAlgError(ValueError):
    pass


def zeros_vec(field, n):
    return tuple(field.zero() for _ in range(n))


def unit_vec(field, n, i):
    z = field.zero()
    return tuple(field.one() if j == i else z for j in range(n))


def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))

def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))

def vec_scale(field, c, u):
    return tuple(field.mul(c, a) for a in u)


def vec_is_zero(field, u):
    z = field.zero()
    return all(a == z for a in u)


def rref(field, rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows]
    zero, one = field.zero(), field.one()
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] != zero), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        if rows[r][c] != one:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != zero:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in rows[:r]], pivots


def rank(field, rows):
    return len(rref(field, rows)[0])


def mat_mul(field, A, B):
    zero = field.zero()
    Bt = list(zip(*B))
    out = []
    for row in A:
        orow = []
        for col in Bt:
            s = zero
            for a, b in zip(row, col):
                s = field.add(s, field.mul(a, b))
            orow.append(s)
        out.append(tuple(orow))
    return out


def mat_vec(field, A, v):
    return tuple(mat_mul(field, A, [[x] for x in v])[i][0]
                 for i in range(len(A)))


def identity(field, n):
    return [unit_vec(field, n, i) for i in range(n)]


def transpose(A):
    return [tuple(col) for col in zip(*A)]


def mat_inv(field, A):
    n = len(A)
    aug = [tuple(A[i]) + unit_vec(field, n, i) for i in range(n)]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        raise LinAlgError("matrix is singular")
    return [row[n:] for row in red]


def solve(field, A, b):
    """One exact solution x of A x = b (rows A), or None; free vars = 0."""
    if not A:
        return None
    ncols = len(A[0])
    aug = [tuple(row) + (bv,) for row, bv in zip(A, b)]
    red, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    zero = field.zero()
    x = [zero] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return tuple(x)


def kernel_basis(field, A):
    """Basis of the right kernel {x : A x = 0}, echelon-canonical."""
    if not A:
        return []
    ncols = len(A[0])
    red, pivots = rref(field, A)
    free = [c for c in range(ncols) if c not in pivots]
    zero, one = field.zero(), field.one()
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            v[p] = field.neg(row[f])
        basis.append(tuple(v))
    return rref(field, basis)[0] if basis else []


class Subspace:
    """Subspace of F^n, canonically represented by its RREF basis rows."""

    __slots__ = ("field", "ambient", "rows")

    def __init__(self, field, ambient, rows):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(rows)

    @classmethod
    def span(cls, field, ambient, vectors):
        rows, _ = rref(field, [list(v) for v in vectors]) if vectors else ([], [])
        return cls(field, ambient, rows)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, [])

    @classmethod
    def full(cls, field, ambient):
        return cls(field, ambient, identity(field, ambient))

    @property
    def dim(self):
        return len(self.rows)

    def contains_vec(self, v):
        return vec_is_zero(self.field, self.reduce_vec(v))

    def reduce_vec(self, v):
        """Residue of v after elimination against the echelon basis."""
        F = self.field
        v = list(v)
        zero = F.zero()
        for row in self.rows:
            p = next(i for i, x in enumerate(row) if x != zero)
            if v[p] != zero:
                f = v[p]
                v = [F.sub(a, F.mul(f, b)) for a, b in zip(v, row)]
        return tuple(v)

    def coords_of(self, v):
        """Coefficients of v over the echelon basis, or None if outside."""
        F = self.field
        v = list(v)
        zero = F.zero()
        coords = []
        for row in self.rows:
            p = next(i for i, x in enumerate(row) if x != zero)
            f = v[p]
            coords.append(f)
            if f != zero:
                v = [F.sub(a, F.mul(f, b)) for a, b in zip(v, row)]
        if not vec_is_zero(F, v):
            return None
        return tuple(coords)

    def contains(self, other):
        return all(self.contains_vec(r) for r in other.rows)

    def sum(self, other):
        self._check(other)
        return Subspace.span(self.field, self.ambient,
                             list(self.rows) + list(other.rows))

    def intersect(self, other):
        self._check(other)
        # x = a.A = b.B ; solve [A^T | -B^T] (a,b)^T = 0
        F = self.field
        if not self.rows or not other.rows:
            return Subspace.zero(F, self.ambient)
        rows_a = list(self.rows)
        rows_b = list(other.rows)
        A = []
        for i in range(self.ambient):
            A.append([r[i] for r in rows_a]
                     + [F.neg(r[i]) for r in rows_b])
        out = []
        for k in kernel_basis(F, A):
            coeffs = k[:len(rows_a)]
            v = zeros_vec(F, self.ambient)
            for c, r in zip(coeffs, rows_a):
                v = vec_add(F, v, vec_scale(F, c, r))
            out.append(v)
        return Subspace.span(F, self.ambient, out)

    def perp(self, gram):
        """Orthogonal complement with respect to the bilinear form gram."""
        F = self.field
        if not self.rows:
            return Subspace.full(F, self.ambient)
        A = [mat_vec(F, gram, r) for r in self.rows]
        return Subspace.span(F, self.ambient, kernel_basis(F, A))

    def complement_basis(self, inside=None):
        """Deterministic vectors extending this space to `inside` (default:
        the full ambient space), taken from the bigger space's echelon basis
        completed greedily."""
        F = self.field
        big = inside.rows if inside is not None else identity(F, self.ambient)
        cur = [list(r) for r in self.rows]
        out = []
        for v in big:
            stack, _ = rref(F, cur + [list(v)])
            if len(stack) > len(cur):
                out.append(tuple(v))
                cur = [list(r) for r in stack]
        return out

    def _check(self, other):
        if other.ambient != self.ambient:
            raise LinAlgError("ambient dimension mismatch: %d vs %d"
                              % (self.ambient, other.ambient))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __le__(self, other):
        return other.contains(self)

    def __lt__(self, other):
        return other.contains(self) and self.rows != other.rows

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def quotient_coords(field, v, mod, basis):
    """Coordinates of v over `basis` modulo the subspace `mod`.

    Raises if the basis images are dependent mod `mod` or v is outside
    span(basis) + mod.
    """
    reduced = [mod.reduce_vec(b) for b in basis]
    space = Subspace.span(field, mod.ambient, reduced)
    if space.dim != len(basis):
        raise LinAlgError("basis is dependent modulo the subspace")
    A = [[r[i] for r in reduced] for i in range(mod.ambient)]
    x = solve(field, A, list(mod.reduce_vec(v)))
    if x is None:
        raise LinAlgError("vector not in span(basis) + subspace")
    return x
