"""Command-line surface.

Verbs: verify, report, classify, iso, count, catalogue and the testing
helper scramble-roundtrip.  Exit codes: 0 success, 1 domain error
(axiom failure, invalid parameters, failed round trip), 2 usage error
(bad flags, unreadable or malformed input).
"""

import argparse
import sys

from .classify import canonicalize, centre4_type, scramble
from .core import Presentation, PresentationError, expand, verify_axioms
from .families import (FAMILY_TAGS, FamilyError, PARAM_ARITY,
                       POWER_EXPONENT, default_params, presentation)
from .field import FieldError, parse_field
from .structure import structure_report
from . import equivalence


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _build_parser():
    p = argparse.ArgumentParser(
        prog="saalg",
        description="construct, verify, classify and compare nilpotent "
                    "symplectic alternating algebras of dimension 10")
    sub = p.add_subparsers(dest="verb")
    for verb in ("verify", "report", "classify", "iso", "count",
                 "catalogue", "scramble-roundtrip"):
        q = sub.add_parser(verb)
        q.add_argument("--field", action="append", default=[])
        q.add_argument("--file", action="append", default=[])
        q.add_argument("--family", action="append", default=[])
        q.add_argument("--params", action="append", default=[])
        q.add_argument("--format", choices=("text", "tsv"), default="text")
        q.add_argument("--seed", type=int, default=0)
    return p


def _one(values, what, required=True):
    if len(values) > 1:
        raise UsageError("at most one %s may be given here" % what)
    if not values:
        if required:
            raise UsageError("missing required %s" % what)
        return None
    return values[0]


def _parse_field_arg(text):
    try:
        return parse_field(text)
    except FieldError as e:
        raise UsageError("bad field spec %r: %s" % (text, e))


def _parse_params(field, tag, text):
    arity = PARAM_ARITY.get(tag, 0)
    if text is None:
        if arity == 0:
            return ()
        return default_params(tag, field)
    parts = [t for t in text.split(",") if t.strip()]
    if len(parts) != arity:
        raise UsageError("%s takes %d parameter(s), got %r"
                         % (tag, arity, text))
    try:
        return tuple(field.parse(t.strip()) for t in parts)
    except FieldError as e:
        raise UsageError("bad parameter list %r: %s" % (text, e))


def _read_file(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e))


def _load_presentation(path, field_arg):
    try:
        pres = Presentation.parse(_read_file(path))
    except PresentationError as e:
        raise UsageError("%s: %s" % (path, e))
    if field_arg is not None and field_arg.spec() != pres.field.spec():
        raise UsageError("file %s is over %s, but --field says %s"
                         % (path, pres.field.spec(), field_arg.spec()))
    return pres


def _algebra_inputs(args, count=1):
    """The presentations a verb operates on, from --file and/or
    --family/--params."""
    field = None
    if args.field:
        if len(args.field) > 1:
            raise UsageError("give at most one --field here")
        field = _parse_field_arg(args.field[0])
    out = []
    for path in args.file:
        out.append(_load_presentation(path, field))
    for i, tag in enumerate(args.family):
        if tag not in FAMILY_TAGS:
            raise UsageError("unknown family %r (choose from %s)"
                             % (tag, " ".join(FAMILY_TAGS)))
        if field is None:
            raise UsageError("--family needs --field")
        text = args.params[i] if i < len(args.params) else None
        params = _parse_params(field, tag, text)
        try:
            out.append(presentation(tag, field, params))
        except FamilyError as e:
            raise DomainError(str(e))
    if len(out) != count:
        raise UsageError("this verb needs exactly %d algebra input(s) "
                         "(via --file or --family), got %d"
                         % (count, len(out)))
    return out


def _emit(rows, fmt, out):
    if fmt == "tsv":
        for row in rows:
            out.write("\t".join(str(c) for c in row) + "\n")
    else:
        for row in rows:
            out.write("  ".join(str(c) for c in row) + "\n")


def _cmd_verify(args, out):
    (pres,) = _algebra_inputs(args)
    rep = verify_axioms(expand(pres))
    if rep.ok:
        out.write("pass\n")
        return 0
    out.write("fail\n")
    for f in rep.failures:
        out.write("  %s\n" % f)
    return 1


def _cmd_report(args, out):
    (pres,) = _algebra_inputs(args)
    rep = structure_report(expand(pres))
    if args.format == "tsv":
        _emit([("nilpotent", "yes" if rep.nilpotent else "no"),
               ("class", rep.cls if rep.cls is not None else "-"),
               ("lower_dims", ",".join(map(str, rep.lower_dims))),
               ("upper_dims", ",".join(map(str, rep.upper_dims))),
               ("centre_dim", rep.centre_dim),
               ("centre_isotropic",
                "yes" if rep.centre_isotropic else "no")], "tsv", out)
    else:
        for line in rep.lines():
            out.write(line + "\n")
    return 0


def _cmd_classify(args, out):
    (pres,) = _algebra_inputs(args)
    A = expand(pres)
    try:
        form, witness = canonicalize(A)
    except ValueError as e:
        raise DomainError(str(e))
    out.write("%r\n" % form)
    if witness is not None:
        F = A.field
        for row in witness:
            out.write("  " + " ".join(F.fmt(c) for c in row) + "\n")
    return 0


def _params_equivalent(form_a, form_b):
    tag, field = form_a.tag, form_a.field
    if tag != form_b.tag:
        return False
    if tag in POWER_EXPONENT:
        return bool(equivalence.equiv_r(tag, form_a.params[0],
                                        form_b.params[0], field).equal)
    if tag == "P4_4":
        return bool(equivalence.equiv_c(form_a.params, form_b.params,
                                        field).equal)
    return True


def _cmd_iso(args, out):
    pa, pb = _algebra_inputs(args, count=2)
    if pa.field.spec() != pb.field.spec():
        raise UsageError("the two inputs live over different fields")
    fa, _ = canonicalize(expand(pa))
    fb, _ = canonicalize(expand(pb))
    if fa.tag == "OutOfScope" or fb.tag == "OutOfScope":
        raise DomainError("inputs outside the classified range: %r / %r"
                          % (fa, fb))
    same = _params_equivalent(fa, fb)
    out.write("%s\t%r\t%r\n" % ("isomorphic" if same else "not isomorphic",
                                fa, fb))
    return 0


def _cmd_count(args, out):
    tag = _one(args.family, "--family")
    if tag not in FAMILY_TAGS:
        raise UsageError("unknown family %r" % tag)
    if not args.field:
        raise UsageError("count needs at least one --field")
    rows = []
    for spec in args.field:
        field = _parse_field_arg(spec)
        try:
            rows.append((field.spec(), equivalence.count_classes(tag, field)))
        except (FieldError, FamilyError) as e:
            raise DomainError(str(e))
    if len(rows) == 1 and args.format == "text":
        out.write("%d\n" % rows[0][1])
    else:
        _emit(rows, args.format, out)
    return 0


def _catalogue_rows(field):
    rows = [("family", "params", "centre_dim", "class", "type",
             "series_dims")]
    for tag in FAMILY_TAGS:
        try:
            params = default_params(tag, field)
            pres = presentation(tag, field, params)
        except FamilyError:
            continue
        A = expand(pres)
        rep = structure_report(A)
        kind = "-"
        if rep.centre_dim == 4 and rep.lower_dims[2] == 4:
            kind = centre4_type(A).tag
        rows.append((tag,
                     ",".join(field.fmt(p) for p in params) or "-",
                     rep.centre_dim, rep.cls,
                     kind, ",".join(map(str, rep.lower_dims))))
    return rows


def _cmd_catalogue(args, out):
    spec = _one(args.field, "--field")
    field = _parse_field_arg(spec)
    _emit(_catalogue_rows(field), args.format, out)
    return 0


def _cmd_scramble_roundtrip(args, out):
    (pres,) = _algebra_inputs(args)
    A = expand(pres)
    start, _ = canonicalize(A)
    if start.tag == "OutOfScope":
        raise DomainError("input outside the classified range: %r" % start)
    back, witness = canonicalize(scramble(A, seed=args.seed))
    ok = back.tag != "OutOfScope" and _params_equivalent(start, back)
    out.write("%s\t%r\t%r\tseed=%d\n"
              % ("ok" if ok else "mismatch", start, back, args.seed))
    return 0 if ok else 1


_COMMANDS = {
    "verify": _cmd_verify,
    "report": _cmd_report,
    "classify": _cmd_classify,
    "iso": _cmd_iso,
    "count": _cmd_count,
    "catalogue": _cmd_catalogue,
    "scramble-roundtrip": _cmd_scramble_roundtrip,
}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if args.verb is None:
        parser.print_usage(err)
        return 2
    try:
        return _COMMANDS[args.verb](args, out)
    except UsageError as e:
        err.write("error: %s\n" % e)
        return 2
    except DomainError as e:
        err.write("error: %s\n" % e)
        return 1
    except (FamilyError, FieldError, PresentationError, ValueError) as e:
        err.write("error: %s\n" % e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
