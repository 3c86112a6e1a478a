"""Symplectic alternating algebras on a standard basis.

An algebra here is a dimension-2n space with a non-degenerate alternating
form ( , ) and an alternating product subject to the invariance rule
(u.v, w) = (v.w, u).  On the standard basis x1,y1,...,xn,yn the form is
(xi,yj) = delta_ij, (xi,xj) = (yi,yj) = 0, and a nilpotent presentation
records the sparse triple values (xi.yj, yk) and (yi.yj, yk) for i<j<k.

Coordinate convention everywhere: basis order (x1,y1,x2,y2,...,xn,yn),
so x_i sits at index 2(i-1) and y_i at index 2(i-1)+1.
"""

from .field import parse_field
from . import linalg
from .linalg import vec_add, vec_is_zero, zeros_vec, unit_vec, mat_inv


class PresentationError(ValueError):
    pass


def xi(i):
    """Coordinate index of x_i (1-based i)."""
    return 2 * (i - 1)


def yi(i):
    """Coordinate index of y_i (1-based i)."""
    return 2 * (i - 1) + 1


def basis_label(a):
    i, r = divmod(a, 2)
    return ("y%d" if r else "x%d") % (i + 1)


def standard_gram(field, n):
    """Gram matrix of the standard symplectic basis, row/column order
    (x1,y1,...,xn,yn)."""
    zero, one = field.zero(), field.one()
    G = [[zero] * (2 * n) for _ in range(2 * n)]
    for i in range(1, n + 1):
        G[xi(i)][yi(i)] = one
        G[yi(i)][xi(i)] = field.neg(one)
    return [tuple(r) for r in G]


class Presentation:
    """Sparse nilpotent presentation: triple values (xi.yj,yk) and
    (yi.yj,yk) for 1 <= i < j < k <= n; everything unlisted is zero."""

    def __init__(self, field, n, triples):
        self.field = field
        self.n = n
        self.triples = {}
        zero = field.zero()
        for (kind, i, j, k), val in triples.items():
            if kind not in ("xyy", "yyy"):
                raise PresentationError("unknown triple kind %r" % (kind,))
            if not (1 <= i < j < k <= n):
                raise PresentationError(
                    "indices must satisfy 1 <= i < j < k <= n, got %d %d %d"
                    % (i, j, k))
            if val != zero:
                self.triples[(kind, i, j, k)] = val

    def value(self, kind, i, j, k):
        return self.triples.get((kind, i, j, k), self.field.zero())

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.field == other.field
                and self.n == other.n and self.triples == other.triples)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.triples.items(),
                                          key=lambda kv: kv[0]))))

    def __repr__(self):
        parts = []
        for (kind, i, j, k), v in sorted(self.triples.items()):
            a = ("x%d.y%d" if kind == "xyy" else "y%d.y%d") % (i, j)
            parts.append("(%s,y%d)=%s" % (a, k, self.field.fmt(v)))
        return "Presentation[n=%d; %s]" % (self.n, ", ".join(parts) or "0")

    def triple_on_basis(self, a, b, c):
        """Value of the fully alternating triple form on basis indices
        a, b, c (0-based coordinate positions)."""
        F = self.field
        if a == b or b == c or a == c:
            return F.zero()
        # sort into canonical order: x's before y's, indices ascending
        seq = [a, b, c]
        sign = 1
        for s in range(2):
            for t in range(2 - s):
                if _basis_key(seq[t]) > _basis_key(seq[t + 1]):
                    seq[t], seq[t + 1] = seq[t + 1], seq[t]
                    sign = -sign
        kinds = [p % 2 for p in seq]        # 0 = x, 1 = y
        idx = [p // 2 + 1 for p in seq]
        if kinds == [0, 1, 1]:
            v = self.value("xyy", idx[0], idx[1], idx[2])
        elif kinds == [1, 1, 1]:
            v = self.value("yyy", idx[0], idx[1], idx[2])
        else:
            return F.zero()
        return v if sign == 1 else F.neg(v)

    # -- file format -------------------------------------------------

    @classmethod
    def parse(cls, text):
        """Parse the presentation file format: line 1 a field spec,
        line 2 "n=<int>", then lines "xyy i j k = <elem>" or
        "yyy i j k = <elem>"."""
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if len(lines) < 2:
            raise PresentationError("file needs a field line and an n= line")
        field = parse_field(lines[0])
        if not lines[1].replace(" ", "").startswith("n="):
            raise PresentationError("line 2 must be n=<int>, got %r"
                                    % lines[1])
        try:
            n = int(lines[1].split("=", 1)[1])
        except ValueError:
            raise PresentationError("bad dimension line %r" % lines[1])
        if n < 1:
            raise PresentationError("n must be positive")
        triples = {}
        for ln in lines[2:]:
            if "=" not in ln:
                raise PresentationError("malformed triple line %r" % ln)
            lhs, rhs = ln.split("=", 1)
            parts = lhs.split()
            if len(parts) != 4 or parts[0] not in ("xyy", "yyy"):
                raise PresentationError("malformed triple line %r" % ln)
            try:
                i, j, k = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise PresentationError("bad indices in %r" % ln)
            try:
                val = field.parse(rhs.strip())
            except Exception:
                raise PresentationError("bad element %r in line %r"
                                        % (rhs.strip(), ln))
            triples[(parts[0], i, j, k)] = val
        return cls(field, n, triples)

    def format(self):
        out = [self.field.spec(), "n=%d" % self.n]
        for (kind, i, j, k), v in sorted(self.triples.items()):
            out.append("%s %d %d %d = %s" % (kind, i, j, k,
                                             self.field.fmt(v)))
        return "\n".join(out) + "\n"


def _basis_key(a):
    # x's first, then y's, each by index
    return (a % 2, a // 2)


def expand(pres):
    """Build the full multiplication table of the algebra a nilpotent
    presentation describes.

    The product is reconstructed from the triple form against the
    standard Gram matrix: u.v = sum_k (uv,y_k) x_k - sum_k (uv,x_k) y_k.
    The y-components are usually zero but not always: a product of two
    y's can hit a y-coordinate through an xyy value read sideways.
    """
    F, n = pres.field, pres.n
    dim = 2 * n
    table = []
    for a in range(dim):
        row = []
        for b in range(dim):
            coords = []
            for k in range(1, n + 1):
                coords.append(pres.triple_on_basis(a, b, yi(k)))
                coords.append(F.neg(pres.triple_on_basis(a, b, xi(k))))
            row.append(tuple(coords))
        table.append(tuple(row))
    return SAAlgebra(F, n, table, standard_gram(F, n))


class SAAlgebra:
    """Full multiplication table plus Gram matrix on a basis of size 2n."""

    def __init__(self, field, n, table, gram):
        self.field = field
        self.n = n
        self.dim = 2 * n
        self.table = tuple(tuple(map(tuple, row)) for row in table)
        self.gram = tuple(map(tuple, gram))

    def product(self, u, v):
        F = self.field
        zero = F.zero()
        out = list(zeros_vec(F, self.dim))
        for a, ca in enumerate(u):
            if ca == zero:
                continue
            for b, cb in enumerate(v):
                if cb == zero:
                    continue
                c = F.mul(ca, cb)
                for t, x in enumerate(self.table[a][b]):
                    if x != zero:
                        out[t] = F.add(out[t], F.mul(c, x))
        return tuple(out)

    def pairing(self, u, v):
        F = self.field
        zero = F.zero()
        s = zero
        for a, ca in enumerate(u):
            if ca == zero:
                continue
            row = self.gram[a]
            for b, cb in enumerate(v):
                if cb != zero and row[b] != zero:
                    s = F.add(s, F.mul(F.mul(ca, cb), row[b]))
        return s

    def triple(self, u, v, w):
        return self.pairing(self.product(u, v), w)

    def basis_vec(self, a):
        return unit_vec(self.field, self.dim, a)

    def x(self, i):
        return self.basis_vec(xi(i))

    def y(self, i):
        return self.basis_vec(yi(i))

    def transport(self, rows):
        """The same algebra measured on a new basis.

        `rows` lists the new basis vectors in old coordinates.  Returns
        an SAAlgebra whose table and Gram matrix are expressed in the
        new coordinates.
        """
        F = self.field
        M = [list(r) for r in rows]
        if len(M) != self.dim:
            raise linalg.LinAlgError("need %d basis vectors" % self.dim)
        if F.order is not None and F.order == F.char and F.order < 2 ** 15:
            return self._transport_prime(M)
        Minv = mat_inv(F, M)
        # row vector v in old coords -> coords c with v = c.M, c = v.Minv
        MinvT = linalg.transpose(Minv)

        def to_new(v):
            return linalg.mat_vec(F, MinvT, v)

        table = []
        for a in range(self.dim):
            row = []
            for b in range(self.dim):
                row.append(to_new(self.product(M[a], M[b])))
            table.append(row)
        gram = [[self.pairing(M[a], M[b]) for b in range(self.dim)]
                for a in range(self.dim)]
        return SAAlgebra(F, self.n, table, gram)

    def _transport_prime(self, M):
        """Vectorized transport for small prime fields, where elements are
        plain residues and the whole structure tensor fits in int64."""
        import numpy as np
        F = self.field
        p = F.order
        Minv = mat_inv(F, M)
        T = np.array(self.table, dtype=np.int64)
        Mn = np.array(M, dtype=np.int64)
        In = np.array(Minv, dtype=np.int64)
        t1 = np.tensordot(Mn, T, axes=(1, 0)) % p      # (a, j, s)
        t2 = np.tensordot(Mn, t1, axes=(1, 1)) % p     # (b, a, s)
        t3 = (t2 @ In) % p                             # (b, a, t)
        tab = t3.transpose(1, 0, 2).tolist()
        G = np.array(self.gram, dtype=np.int64)
        gram = ((Mn @ G) @ Mn.T % p).tolist()
        return SAAlgebra(F, self.n, tab, gram)

    def is_standard_gram(self):
        return self.gram == tuple(map(tuple,
                                      standard_gram(self.field, self.n)))

    def measure(self):
        """Read a nilpotent presentation off the table.

        Only meaningful when the algebra sits on a standard basis and is
        genuinely of presentation shape; `presented_by` checks that.
        """
        F, n = self.field, self.n
        zero = F.zero()
        triples = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    v = self.pairing(self.table[xi(i)][yi(j)], self.y(k))
                    if v != zero:
                        triples[("xyy", i, j, k)] = v
                    v = self.pairing(self.table[yi(i)][yi(j)], self.y(k))
                    if v != zero:
                        triples[("yyy", i, j, k)] = v
        return Presentation(F, n, triples)

    def presented_by(self):
        """The presentation this table realizes, or None if the table is
        not of nilpotent presentation shape on the standard basis."""
        if not self.is_standard_gram():
            return None
        p = self.measure()
        if expand(p).table == self.table:
            return p
        return None

    def __eq__(self, other):
        return (isinstance(other, SAAlgebra) and self.field == other.field
                and self.table == other.table and self.gram == other.gram)

    def __repr__(self):
        return "SAAlgebra(dim=%d over %s)" % (self.dim, self.field.spec())


class AxiomReport:
    def __init__(self, ok, failures):
        self.ok = ok
        self.failures = failures

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "AxiomReport(pass)"
        return "AxiomReport(fail: %s)" % "; ".join(self.failures[:3])


def verify_axioms(A, max_failures=5):
    """Check the algebra axioms on all basis triples.

    Alternating product, invariance (e_a e_b, e_c) = (e_b e_c, e_a), and
    an alternating non-degenerate Gram matrix.  Violations are collected
    and reported, not raised.
    """
    F = A.field
    dim = A.dim
    zero = F.zero()
    failures = []

    def note(msg):
        failures.append(msg)
        return len(failures) >= max_failures

    for a in range(dim):
        if A.gram[a][a] != zero:
            if note("gram not alternating at (%d,%d)" % (a, a)):
                return AxiomReport(False, failures)
        for b in range(dim):
            if F.add(A.gram[a][b], A.gram[b][a]) != zero:
                if note("gram not antisymmetric at (%d,%d)" % (a, b)):
                    return AxiomReport(False, failures)
    if linalg.rank(F, [list(r) for r in A.gram]) != dim:
        failures.append("gram is degenerate")
        return AxiomReport(False, failures)

    for a in range(dim):
        if not vec_is_zero(F, A.table[a][a]):
            if note("product not alternating at %s" % basis_label(a)):
                return AxiomReport(False, failures)
        for b in range(a + 1, dim):
            s = vec_add(F, A.table[a][b], A.table[b][a])
            if not vec_is_zero(F, s):
                if note("product not antisymmetric at (%s,%s)"
                        % (basis_label(a), basis_label(b))):
                    return AxiomReport(False, failures)

    for a in range(dim):
        ea = A.basis_vec(a)
        for b in range(dim):
            ab = A.table[a][b]
            for c in range(dim):
                lhs = A.pairing(ab, A.basis_vec(c))
                rhs = A.pairing(A.table[b][c], ea)
                if lhs != rhs:
                    if note("invariance fails at (%s,%s,%s)"
                            % (basis_label(a), basis_label(b),
                               basis_label(c))):
                        return AxiomReport(False, failures)
    return AxiomReport(len(failures) == 0, failures)


def is_symplectic(A, rows):
    """Do the row vectors form a standard symplectic basis for A's form?"""
    F = A.field
    G = standard_gram(F, A.n)
    for a in range(A.dim):
        for b in range(A.dim):
            if A.pairing(rows[a], rows[b]) != G[a][b]:
                return False
    return True
