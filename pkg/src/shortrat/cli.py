"""Command-line front end.

Polytope files use the LattE convention: a header ``m n+1`` followed by m
rows ``b -a_1 ... -a_n`` meaning b - a.x >= 0, then optional lines
``linearity k i_1 ... i_k`` (1-based rows that are equations) and
``nonnegative k j_1 ... j_k`` (variables constrained to be >= 0).

Matrix and ray files: a header ``rows cols`` followed by the rows.
Exit codes: 0 success, 1 bad input, 2 empty polytope.
"""
import argparse
import json
import sys

from .ehrhart import GradedSemigroup, ehrhart_series, gorenstein_check, hilbert_series
from .genfun import TermOrder
from .polytope import Polyhedron, UnboundedError, brion_genfun, count, enumerate_vertices
from .toric import (ToricInstance, calibrate_conventions, count_binomials_bounded,
                    expand_binomials, normal_form_desk, order_filter, universal_gb_genfun)

EXIT_OK, EXIT_INPUT, EXIT_EMPTY = 0, 1, 2


class InputError(ValueError):
    pass


def _int_rows(lines, ncols):
    rows = []
    for ln in lines:
        try:
            row = [int(x) for x in ln.split()]
        except ValueError:
            raise InputError("non-integer entry in %r" % ln)
        if len(row) != ncols:
            raise InputError("expected %d entries, got %d in %r" % (ncols, len(row), ln))
        rows.append(row)
    return rows


def _content_lines(text):
    out = []
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            out.append(ln)
    return out


def _header(line):
    try:
        a, b = (int(x) for x in line.split())
    except ValueError:
        raise InputError("bad header line %r" % line)
    if a < 0 or b < 1:
        raise InputError("bad header dimensions %r" % line)
    return a, b


def parse_polytope(text):
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty file")
    m, cols = _header(lines[0])
    if cols < 2:
        raise InputError("need at least one variable")
    if len(lines) < 1 + m:
        raise InputError("expected %d constraint rows" % m)
    rows = _int_rows(lines[1:1 + m], cols)
    n = cols - 1
    eq_idx, nonneg = set(), set()
    for ln in lines[1 + m:]:
        parts = ln.split()
        key = parts[0].lower()
        if key not in ("linearity", "nonnegative"):
            raise InputError("unexpected line %r" % ln)
        try:
            vals = [int(x) for x in parts[1:]]
        except ValueError:
            raise InputError("bad %s line %r" % (key, ln))
        if not vals or vals[0] != len(vals) - 1:
            raise InputError("%s count does not match its list" % key)
        limit = m if key == "linearity" else n
        if any(not 1 <= i <= limit for i in vals[1:]):
            raise InputError("index out of range in %r" % ln)
        (eq_idx if key == "linearity" else nonneg).update(i - 1 for i in vals[1:])
    A, b, E, d = [], [], [], []
    for i, r in enumerate(rows):
        a = [-x for x in r[1:]]
        if i in eq_idx:
            E.append(a)
            d.append(r[0])
        else:
            A.append(a)
            b.append(r[0])
    for j in sorted(nonneg):
        A.append([-int(k == j) for k in range(n)])
        b.append(0)
    return Polyhedron(A, b, E, d, n)


def parse_matrix(text):
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty file")
    m, n = _header(lines[0])
    if len(lines) != 1 + m:
        raise InputError("expected %d rows, found %d" % (m, len(lines) - 1))
    return _int_rows(lines[1:], n)


def parse_vector(s):
    try:
        return [int(x) for x in s.replace(",", " ").split()]
    except ValueError:
        raise InputError("bad integer vector %r" % s)


def parse_order(text, n):
    rows = _int_rows(_content_lines(text), n)
    if len(rows) != n:
        raise InputError("term order needs %d rows" % n)
    try:
        return TermOrder(rows)
    except ValueError as e:
        raise InputError(str(e))


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise InputError(str(e))


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _vec(v):
    return "(" + ",".join(str(x) for x in v) + ")"


# ----------------------------------------------------------------- commands

def cmd_count(args):
    P = parse_polytope(_read(args.file))
    if not enumerate_vertices(P):
        _emit(args, "0", {"count": 0, "empty": True})
        return EXIT_EMPTY
    c = count(P)
    _emit(args, str(c), {"count": c})
    return EXIT_OK


def cmd_ehrhart(args):
    P = parse_polytope(_read(args.file))
    if not enumerate_vertices(P):
        _emit(args, "0", {"series": None, "empty": True})
        return EXIT_EMPTY
    s = ehrhart_series(P)
    coeffs = s.coefficients(args.terms)
    text = "%s\n%s" % (s, " ".join(map(str, coeffs)))
    _emit(args, text, {"numerator": list(s.numerator), "denominator": list(s.den), "coefficients": coeffs})
    return EXIT_OK


def _semigroup(args):
    rays = parse_matrix(_read(args.file))
    if not rays:
        raise InputError("no rays")
    return GradedSemigroup(rays)


def cmd_hilbert(args):
    rays = parse_matrix(_read(args.file))
    if not rays:
        raise InputError("no rays")
    grading = parse_vector(args.grading) if args.grading else [1] * len(rays[0])
    s = hilbert_series(GradedSemigroup(rays, grading))
    coeffs = s.coefficients(args.terms)
    text = "%s\n%s" % (s, " ".join(map(str, coeffs)))
    _emit(args, text, {"numerator": list(s.numerator), "denominator": list(s.den), "coefficients": coeffs})
    return EXIT_OK


def cmd_gorenstein(args):
    ok, a = gorenstein_check(_semigroup(args))
    text = "yes %s" % _vec(a) if ok else "no"
    _emit(args, text, {"gorenstein": ok, "witness": list(a) if ok else None})
    return EXIT_OK


def cmd_genfun(args):
    P = parse_polytope(_read(args.file))
    f = brion_genfun(P)
    _emit(args, f.to_text().rstrip("\n"), {"dim": f.dim, "terms": [str(t) for t in f.terms]})
    return EXIT_OK


def _toric(args):
    A = parse_matrix(_read(args.file))
    if not A:
        raise InputError("empty matrix")
    return ToricInstance(A)


def _order(args, n):
    return parse_order(_read(args.order), n) if args.order else TermOrder.lex(n)


def cmd_toric(args):
    inst = _toric(args)
    if args.action == "count":
        if args.D is None:
            raise InputError("toric count needs -D")
        grading = parse_vector(args.grading) if args.grading else None
        res = count_binomials_bounded(inst.A, args.D, args.degree, grading)
        payload = dict(res.as_dict(), degree=args.degree, D=args.D)
        if args.calibrate:
            payload["calibrated"] = [list(c) for c in calibrate_conventions(inst.A, args.calibrate, grading)]
        _emit(args, str(getattr(res, args.convention)), payload)
        return EXIT_OK
    G0 = universal_gb_genfun(inst, args.bound)
    if args.action == "ugb":
        _emit(args, G0.genfun.to_text().rstrip("\n"), {"M": G0.box, "terms": [str(t) for t in G0.genfun.terms]})
        return EXIT_OK
    G = order_filter(G0, _order(args, inst.n))
    if args.action == "filter":
        _emit(args, G.genfun.to_text().rstrip("\n"), {"M": G.box, "terms": [str(t) for t in G.genfun.terms]})
        return EXIT_OK
    if args.point is None:
        raise InputError("toric nf needs --point")
    a = parse_vector(args.point)
    if len(a) != inst.n or any(x < 0 for x in a):
        raise InputError("point must be a nonnegative vector of length %d" % inst.n)
    pairs = expand_binomials(G)
    nf = normal_form_desk(a, pairs, _order(args, inst.n))
    _emit(args, _vec(nf), {"normal_form": list(nf)})
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="shortrat", description="Lattice point counting with short rational functions")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="number of lattice points of a polytope")
    c.add_argument("file")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("ehrhart", parents=[common], help="Ehrhart series of a polytope")
    e.add_argument("file")
    e.add_argument("--terms", type=int, default=6)
    e.set_defaults(func=cmd_ehrhart)

    h = sub.add_parser("hilbert", parents=[common], help="Hilbert series of the semigroup of a cone")
    h.add_argument("file", help="ray file")
    h.add_argument("--grading", help="comma separated degree vector (default all ones)")
    h.add_argument("--terms", type=int, default=6)
    h.set_defaults(func=cmd_hilbert)

    g = sub.add_parser("gorenstein", parents=[common], help="Gorenstein test for the semigroup of a cone")
    g.add_argument("file", help="ray file")
    g.set_defaults(func=cmd_gorenstein)

    f = sub.add_parser("genfun", parents=[common], help="short rational generating function of a polytope")
    f.add_argument("file")
    f.set_defaults(func=cmd_genfun)

    t = sub.add_parser("toric", parents=[common], help="binomial sets of a toric ideal")
    t.add_argument("action", choices=["ugb", "filter", "count", "nf"])
    t.add_argument("file", help="matrix file")
    t.add_argument("-D", type=int, help="degree bound for count")
    t.add_argument("--degree", choices=["box", "graded"], default="box")
    t.add_argument("--convention", choices=["raw", "off_diagonal", "unordered"], default="raw")
    t.add_argument("--grading")
    t.add_argument("--calibrate", type=int, metavar="DMAX", help="check conventions against brute force up to DMAX")
    t.add_argument("--bound", type=int, help="box bound replacing M")
    t.add_argument("--order", help="term order file (default lex)")
    t.add_argument("--point", help="exponent vector to reduce (nf)")
    t.set_defaults(func=cmd_toric)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UnboundedError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
