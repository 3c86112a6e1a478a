"""The canonical dimension-10 presentation families and tagged forms.

Family tags: P4_1..P4_4 have centre of dimension 4, P2_1..P2_7 centre of
dimension 2 (both isotropic).  P4_4 carries a parameter pair (alpha, beta)
with t^2 + alpha*t + beta irreducible; P2_2, P2_4, P2_5, P2_6 carry a
nonzero scaling parameter r.  The remaining families are parameter-free.
"""

from .core import Presentation
from .field import is_irreducible_quadratic


FAMILY_TAGS = ("P4_1", "P4_2", "P4_3", "P4_4",
               "P2_1", "P2_2", "P2_3", "P2_4", "P2_5", "P2_6", "P2_7")

# families whose parameter r lives in F*/(F*)^k
POWER_EXPONENT = {"P2_2": 4, "P2_4": 11, "P2_5": 3, "P2_6": 12}

PARAM_ARITY = {"P4_4": 2, "P2_2": 1, "P2_4": 1, "P2_5": 1, "P2_6": 1}


class FamilyError(ValueError):
    pass


class CanonicalForm:
    """A family tag plus its field parameters (possibly none)."""

    def __init__(self, tag, field, params=()):
        if tag != "OutOfScope" and tag not in FAMILY_TAGS:
            raise FamilyError("unknown family tag %r" % (tag,))
        self.tag = tag
        self.field = field
        self.params = tuple(params)

    @property
    def reason(self):
        # only for OutOfScope forms, where params holds the reason text
        return self.params[0] if self.tag == "OutOfScope" else None

    def __eq__(self, other):
        return (isinstance(other, CanonicalForm) and self.tag == other.tag
                and self.field == other.field and self.params == other.params)

    def __hash__(self):
        return hash((self.tag, self.params))

    def __repr__(self):
        if self.tag == "OutOfScope":
            return "OutOfScope(%s)" % self.reason
        if self.params:
            return "%s(%s)" % (self.tag, ",".join(self.field.fmt(p)
                                                  for p in self.params))
        return self.tag


def out_of_scope(field, reason):
    f = CanonicalForm.__new__(CanonicalForm)
    f.tag = "OutOfScope"
    f.field = field
    f.params = (reason,)
    return f


def presentation(tag, field, params=()):
    """The canonical presentation for a family tag over a field."""
    params = tuple(params)
    arity = PARAM_ARITY.get(tag, 0)
    if len(params) != arity:
        raise FamilyError("%s takes %d parameter(s), got %d"
                          % (tag, arity, len(params)))
    one = field.one()
    zero = field.zero()
    if tag in POWER_EXPONENT:
        r = params[0]
        if r == zero:
            raise FamilyError("%s needs a nonzero parameter" % tag)
    if tag == "P4_1":
        t = {("yyy", 2, 3, 4): one, ("yyy", 1, 4, 5): one,
             ("xyy", 1, 3, 5): one}
    elif tag == "P4_2":
        t = {("xyy", 1, 2, 3): one, ("yyy", 1, 4, 5): one}
    elif tag == "P4_3":
        t = {("xyy", 1, 2, 3): one, ("yyy", 1, 2, 4): one,
             ("yyy", 1, 3, 5): one}
    elif tag == "P4_4":
        alpha, beta = params
        if not is_irreducible_quadratic(field, alpha, beta):
            raise FamilyError(
                "t^2+%s*t+%s is reducible over %s"
                % (field.fmt(alpha), field.fmt(beta), field.spec()))
        t = {("xyy", 1, 2, 3): one, ("xyy", 1, 3, 4): alpha,
             ("xyy", 1, 4, 5): beta, ("yyy", 1, 2, 5): one,
             ("yyy", 1, 3, 4): one}
    elif tag == "P2_1":
        t = {("xyy", 3, 4, 5): one, ("xyy", 2, 3, 5): one,
             ("xyy", 1, 3, 4): one, ("yyy", 1, 2, 5): one}
    elif tag == "P2_2":
        t = {("xyy", 3, 4, 5): params[0], ("xyy", 2, 3, 5): one,
             ("xyy", 1, 3, 4): one, ("yyy", 1, 2, 3): one}
    elif tag == "P2_3":
        t = {("xyy", 3, 4, 5): one, ("xyy", 2, 3, 5): one,
             ("xyy", 1, 2, 5): one, ("yyy", 1, 2, 4): one}
    elif tag == "P2_4":
        t = {("xyy", 3, 4, 5): params[0], ("xyy", 2, 3, 5): one,
             ("xyy", 1, 2, 5): one, ("xyy", 1, 3, 4): one,
             ("yyy", 1, 2, 4): one}
    elif tag == "P2_5":
        t = {("xyy", 2, 3, 5): params[0], ("xyy", 3, 4, 5): one,
             ("xyy", 1, 2, 5): one, ("yyy", 1, 2, 3): one}
    elif tag == "P2_6":
        t = {("xyy", 2, 3, 5): params[0], ("xyy", 3, 4, 5): one,
             ("xyy", 1, 2, 5): one, ("xyy", 1, 3, 4): one,
             ("yyy", 1, 2, 3): one}
    elif tag == "P2_7":
        t = {("xyy", 2, 3, 5): one, ("xyy", 3, 4, 5): one,
             ("xyy", 1, 2, 4): one, ("yyy", 1, 2, 3): one}
    else:
        raise FamilyError("unknown family tag %r" % (tag,))
    return Presentation(field, 5, t)


def form_presentation(form):
    if form.tag == "OutOfScope":
        raise FamilyError("out-of-scope form has no presentation")
    return presentation(form.tag, form.field, form.params)


def default_params(tag, field):
    """A valid parameter tuple for the tag over the field, if it needs one.

    For P4_4 this searches for an irreducible t^2+alpha*t+beta, smallest
    in the field's element order; raises if the field is infinite (over
    the rationals callers should pick their own pair, e.g. (0,1))."""
    arity = PARAM_ARITY.get(tag, 0)
    if arity == 0:
        return ()
    if tag == "P4_4":
        if not field.is_finite:
            return (field.zero(), field.one())
        elems = list(field.elements())
        for alpha in elems:
            for beta in elems:
                if is_irreducible_quadratic(field, alpha, beta):
                    return (alpha, beta)
        raise FamilyError("no irreducible quadratic over %s" % field.spec())
    return (field.one(),)
