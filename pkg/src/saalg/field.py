"""Exact field arithmetic: GF(p), GF(p^n) and the rationals.

Elements are stored in canonical raw form (int residue, coefficient tuple,
or Fraction) and all operations go through the owning field object, so
equality of elements is plain ``==`` on the canonical values.
"""

from fractions import Fraction
from math import gcd

import sympy


class FieldError(ValueError):
    pass


class Field:
    """Common interface for the concrete fields below."""

    kind = None          # "prime" | "extension" | "rationals"
    char = None          # characteristic (0 or prime)
    order = None         # number of elements, or None if infinite

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        if b == self.zero():
            raise ZeroDivisionError("division by zero in %s" % self)
        return self.mul(a, self.inv(b))

    def from_int(self, m):
        """Image of the integer m under the canonical ring map Z -> F."""
        raise NotImplementedError

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        r = self.one()
        b = a
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    def elements(self):
        """Iterate over all elements (finite fields only), in sort-key order."""
        raise FieldError("field %s is not finitely enumerable" % self)

    def units(self):
        z = self.zero()
        return (a for a in self.elements() if a != z)

    def sort_key(self, a):
        """Deterministic total order on elements, used for tie-breaking."""
        raise NotImplementedError

    @property
    def is_finite(self):
        return self.order is not None

    def parse(self, text):
        raise NotImplementedError

    def fmt(self, a):
        raise NotImplementedError

    def __repr__(self):
        return self.spec()


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if p < 2 or not sympy.isprime(p):
            raise FieldError("GF(%d): modulus must be prime" % p)
        self.p = p
        self.char = p
        self.order = p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def from_int(self, m):
        return m % self.p

    def elements(self):
        return iter(range(self.p))

    def sort_key(self, a):
        return a

    def parse(self, text):
        try:
            return int(text, 10) % self.p
        except ValueError:
            raise FieldError("bad GF(%d) element: %r" % (self.p, text))

    def fmt(self, a):
        return str(a)

    def spec(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))


def _poly_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mod(cs, mod, p):
    """Remainder of cs modulo the monic polynomial mod, coefficients mod p."""
    cs = [c % p for c in cs]
    d = len(mod) - 1
    while len(_poly_trim(cs)) > d:
        cs = _poly_trim(cs)
        lead = cs[-1]
        shift = len(cs) - 1 - d
        for i, m in enumerate(mod):
            cs[shift + i] = (cs[shift + i] - lead * m) % p
        cs = cs[:-1]
    cs = cs[:d] + [0] * max(0, d - len(cs))
    return [c % p for c in cs[:d]]


def _poly_irreducible(mod, p):
    """Exhaustive irreducibility test for monic mod of degree <= 4 over GF(p)."""
    deg = len(mod) - 1
    if deg <= 1:
        return deg == 1
    # root search kills all reducible polynomials of degree 2 and 3
    for a in range(p):
        v = 0
        for c in reversed(mod):
            v = (v * a + c) % p
        if v == 0:
            return False
    if deg <= 3:
        return True
    if deg == 4:
        # no roots: remaining reducible shapes are products of two
        # irreducible quadratics; trial-divide by every monic quadratic
        for b in range(p):
            for c in range(p):
                q = [c, b, 1]
                if _poly_mod(mod, q, p) == [0, 0]:
                    return False
        return True
    raise FieldError("extension degree %d > 4 unsupported" % deg)


class ExtField(Field):
    """GF(p^n) as GF(p)[t]/(m(t)); elements are length-n coefficient tuples."""

    kind = "extension"

    def __init__(self, p, modulus):
        if not sympy.isprime(p):
            raise FieldError("GF(p^n): p=%d must be prime" % p)
        modulus = [c % p for c in modulus]
        if not modulus or modulus[-1] == 0:
            raise FieldError("modulus must have nonzero leading coefficient")
        n = len(modulus) - 1
        if n < 2 or n > 4:
            raise FieldError("extension degree must be 2..4, got %d" % n)
        if modulus[-1] != 1:
            lead_inv = pow(modulus[-1], p - 2, p)
            modulus = [(c * lead_inv) % p for c in modulus]
        if not _poly_irreducible(modulus, p):
            raise FieldError(
                "modulus %r is reducible over GF(%d)" % (modulus, p))
        self.p = p
        self.n = n
        self.modulus = tuple(modulus)
        self.char = p
        self.order = p ** n
        if p ** n > 256:
            raise FieldError("field order %d > 256 unsupported" % (p ** n))

    def zero(self):
        return (0,) * self.n

    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p = self.p
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return tuple(_poly_mod(prod, self.modulus, p))

    def inv(self, a):
        if a == self.zero():
            raise ZeroDivisionError("inverse of 0 in %s" % self.spec())
        return self.pow(a, self.order - 2)

    def from_int(self, m):
        return (m % self.p,) + (0,) * (self.n - 1)

    def elements(self):
        def rec(k):
            if k == 0:
                yield ()
                return
            for rest in rec(k - 1):
                for c in range(self.p):
                    yield rest + (c,)
        # enumerate with the LAST coefficient varying fastest, so the order
        # agrees with sort_key (int encoding, low coefficient most significant)
        for a in sorted(rec(self.n), key=self.sort_key):
            yield a

    def sort_key(self, a):
        k = 0
        for c in reversed(a):
            k = k * self.p + c
        return k

    def parse(self, text):
        """Parse "a0+a1*t+a2*t^2" style polynomial expressions (or an int)."""
        text = text.strip().replace("-", "+-")
        coeffs = [0] * self.n
        for term in text.split("+"):
            term = term.strip()
            if not term:
                continue
            neg = term.startswith("-")
            if neg:
                term = term[1:].strip()
            if "t" not in term:
                c, e = int(term), 0
            else:
                head, _, tail = term.partition("t")
                head = head.rstrip("*").strip()
                c = int(head) if head else 1
                tail = tail.strip()
                e = int(tail[1:]) if tail.startswith("^") else 1
            if e >= self.n:
                raise FieldError("exponent %d too large in %r" % (e, text))
            coeffs[e] = (coeffs[e] + (-c if neg else c)) % self.p
        return tuple(coeffs)

    def fmt(self, a):
        terms = []
        for e, c in enumerate(a):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append("t" if c == 1 else "%d*t" % c)
            else:
                terms.append("t^%d" % e if c == 1 else "%d*t^%d" % (c, e))
        return "+".join(terms) if terms else "0"

    def spec(self):
        return "GF(%d^%d;%s)" % (
            self.p, self.n, ",".join(str(c) for c in self.modulus))

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ext", self.p, self.modulus))


class Rationals(Field):
    kind = "rationals"
    char = 0
    order = None

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def from_int(self, m):
        return Fraction(m)

    def sort_key(self, a):
        return a

    def parse(self, text):
        try:
            return Fraction(text)
        except ValueError:
            raise FieldError("bad rational: %r" % text)

    def fmt(self, a):
        return str(a)

    def spec(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")


QQ = Rationals()


def parse_field(spec):
    """Parse a field spec string: "Q", "GF(p)" or "GF(p^n;c0,c1,...,cn)"."""
    spec = spec.strip()
    if spec in ("Q", "QQ", "Rationals"):
        return QQ
    if spec.startswith("GF(") and spec.endswith(")"):
        body = spec[3:-1]
        if ";" in body:
            head, _, coeffs = body.partition(";")
            if "^" not in head:
                raise FieldError("extension spec needs p^n: %r" % spec)
            p, _, n = head.partition("^")
            p, n = int(p), int(n)
            modulus = [int(c) for c in coeffs.split(",")]
            if len(modulus) != n + 1:
                raise FieldError(
                    "modulus needs %d coefficients in %r" % (n + 1, spec))
            return ExtField(p, modulus)
        if "^" in body:
            p, _, n = body.partition("^")
            return default_ext_field(int(p), int(n))
        return PrimeField(int(body))
    raise FieldError("cannot parse field spec %r" % spec)


def default_ext_field(p, n):
    """GF(p^n) with the first irreducible monic modulus in sort order."""
    for code in range(p ** n):
        cs = []
        m = code
        for _ in range(n):
            cs.append(m % p)
            m //= p
        mod = cs + [1]
        if _poly_irreducible(mod, p):
            return ExtField(p, mod)
    raise FieldError("no irreducible modulus found for GF(%d^%d)" % (p, n))


# ---------------------------------------------------------------------------
# multiplicative-coset utilities


def power_coset_index(field, k):
    """|F* / (F*)^k| for a finite field; equals gcd(k, |F|-1)."""
    if k < 1:
        raise FieldError("k must be positive")
    if not field.is_finite:
        raise FieldError("power cosets of an infinite field are "
                         "not finitely enumerable")
    return gcd(k, field.order - 1)


def kth_powers(field, k):
    """The set {x^k : x in F*} of a finite field."""
    return {field.pow(a, k) for a in field.units()}


def same_power_coset(field, r, s, k):
    """True iff s/r is a k-th power in F*."""
    if r == field.zero() or s == field.zero():
        raise FieldError("power coset test needs nonzero arguments")
    q = field.div(s, r)
    if field.is_finite:
        return q in kth_powers(field, k)
    # rationals: factor the reduced fraction and check exponents mod k
    num, den = q.numerator, q.denominator
    if num < 0 and k % 2 == 0:
        return False
    for _, e in sympy.factorint(abs(num) * den).items():
        if e % k != 0:
            return False
    return True


def kth_root(field, a, k):
    """Some k-th root of a in a finite field, or None."""
    for x in field.units():
        if field.pow(x, k) == a:
            return x
    return None


def power_free_part(field, r, k):
    """Canonical representative of r*(Q*)^k for rationals: k-th-power-free.

    For finite fields returns the sort-smallest element of the coset.
    """
    if field.is_finite:
        return min((field.mul(r, t) for t in kth_powers(field, k)),
                   key=field.sort_key)
    num, den = r.numerator, r.denominator
    sign = -1 if (num < 0 and k % 2 == 1) else 1
    if num < 0 and k % 2 == 0:
        sign = -1  # negative sign cannot be absorbed into an even power
    out = Fraction(1)
    for prime, e in sympy.factorint(abs(num)).items():
        out *= Fraction(prime) ** (e % k)
    for prime, e in sympy.factorint(den).items():
        out /= Fraction(prime) ** (e % k)
    return sign * out


def is_irreducible_quadratic(field, alpha, beta):
    """True iff t^2 + alpha*t + beta has no root in F."""
    if field.is_finite:
        for a in field.elements():
            v = field.add(field.mul(a, field.add(a, alpha)), beta)
            if v == field.zero():
                return False
        return True
    # rationals: a rational root exists iff the discriminant is a square
    disc = alpha * alpha - 4 * beta
    if disc < 0:
        return True
    num, den = disc.numerator, disc.denominator
    rn = sympy.integer_nthroot(num, 2)
    rd = sympy.integer_nthroot(den, 2)
    return not (rn[1] and rd[1])
