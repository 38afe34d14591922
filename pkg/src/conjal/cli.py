"""Command-line interface.

    conjal eval -a quaternion "i*j"
    conjal invert -a split_complex "1+e1"      # exit 1, ERR:NOT_INVERTIBLE
    conjal ideal member --side left --gen x --elem "x*i*x" --deg 3 -a quaternion
    conjal suite [--only NAME]

Exit status: 0 success, 1 domain error, 2 usage or parse error.  Errors go to
stderr as ``ERR:<CODE> <message>``.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import expr as E
from .algebra import CATALOG_NAMES, catalog, dumps_spec, load_spec, validate_algebra
from .errors import ConjalError
from .fractions import classify, invert, left_fraction, right_fraction
from .ideal import poly_ideal_membership, principal_membership
from .polynomial import canonical_degree, conj_as_polynomial, poly_eval
from .rational import reval


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def resolve_algebra(name: str, scalar: str | None):
    if os.path.exists(name):
        spec = load_spec(name)
        if scalar:
            raise UsageError("--scalar cannot override a spec file")
        return spec
    return catalog(name, scalar or "Q")


def _algebra_opts(p):
    p.add_argument("-a", "--algebra", required=True,
                   help=f"catalog name ({', '.join(CATALOG_NAMES)}) or JSON spec file")
    p.add_argument("-s", "--scalar", default=None, help="scalar ring: Z, Q or Z/<n> (default Q)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="conjal", description="Exact algebras with conjugation.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="validate an algebra spec file")
    p.add_argument("file")

    p = sub.add_parser("catalog", help="print a catalog algebra as a spec file")
    p.add_argument("name")
    p.add_argument("-s", "--scalar", default="Q")

    for name, hlp in (("eval", "evaluate an element expression"),
                      ("classify", "zero / zero divisor / invertible"),
                      ("invert", "inverse over the fraction-field scalars"),
                      ("norm", "the scalar a a*")):
        p = sub.add_parser(name, help=hlp)
        _algebra_opts(p)
        p.add_argument("expr")

    p = sub.add_parser("lfrac", help="left fraction a^-1 b")
    _algebra_opts(p)
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("rfrac", help="right fraction b a^-1")
    _algebra_opts(p)
    p.add_argument("b")
    p.add_argument("a")

    p = sub.add_parser("polyeval", help="evaluate a polynomial at a point")
    _algebra_opts(p)
    p.add_argument("poly")
    p.add_argument("--at", required=True)

    p = sub.add_parser("reval", help="evaluate a rational mapping at a point")
    _algebra_opts(p)
    p.add_argument("expr")
    p.add_argument("--at", required=True)

    p = sub.add_parser("conjrep", help="write conjugation as sum u x v")
    _algebra_opts(p)

    p = sub.add_parser("ideal", help="ideal membership")
    isub = p.add_subparsers(dest="ideal_cmd", required=True, parser_class=_Parser)
    m = isub.add_parser("member")
    _algebra_opts(m)
    m.add_argument("--side", choices=("left", "right", "two"), default="left")
    m.add_argument("--gen", required=True)
    m.add_argument("--elem", required=True)
    m.add_argument("--deg", type=int, default=None, help="degree bound for A[x] (default: deg of --elem)")

    p = sub.add_parser("suite", help="run the property suites")
    p.add_argument("--only", action="append", default=None)
    return ap


def _cmd(args, out):
    if args.cmd == "check":
        spec = load_spec(args.file)
        rep = validate_algebra(spec)
        print(rep.render(), file=out)
        return 0 if rep.passed else 1
    if args.cmd == "catalog":
        print(dumps_spec(catalog(args.name, args.scalar)), file=out)
        return 0
    if args.cmd == "suite":
        from .suite import SUITES, print_table, run_suites
        unknown = [n for n in args.only or () if n not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite {unknown[0]!r}; known: {', '.join(SUITES)}")
        results = run_suites(args.only)
        print_table(results, out)
        return 0 if all(rep.passed for _, rep, _ in results) else 1

    alg = resolve_algebra(args.algebra, args.scalar)

    def element(src):
        return E.eval_element(E.parse_expr(src, alg), alg)

    if args.cmd == "eval":
        print(element(args.expr), file=out)
    elif args.cmd == "classify":
        print(classify(element(args.expr)), file=out)
    elif args.cmd == "invert":
        print(invert(element(args.expr)), file=out)
    elif args.cmd == "norm":
        print(element(args.expr).norm(), file=out)
    elif args.cmd == "lfrac":
        print(left_fraction(element(args.a), element(args.b)), file=out)
    elif args.cmd == "rfrac":
        print(right_fraction(element(args.b), element(args.a)), file=out)
    elif args.cmd == "polyeval":
        ast = E.parse_expr(args.poly, alg)
        v = element(args.at)
        if alg.assoc and not E.has_inverse(ast):
            print(poly_eval(E.to_polynomial(ast, alg), v), file=out)
        else:
            print(E.eval_at(ast, alg, v), file=out)
    elif args.cmd == "reval":
        ast = E.parse_expr(args.expr, alg)
        v = element(args.at)
        if alg.assoc:
            print(reval(E.to_rational(ast, alg), v), file=out)
        else:
            print(E.eval_at(ast, alg, v), file=out)
    elif args.cmd == "conjrep":
        print(conj_as_polynomial(alg).render(), file=out)
    elif args.cmd == "ideal":
        return _ideal_member(args, alg, out)
    return 0


def _ideal_member(args, alg, out):
    gen_ast = E.parse_expr(args.gen, alg)
    elem_ast = E.parse_expr(args.elem, alg)
    if E.has_variable(gen_ast) or E.has_variable(elem_ast) or args.deg is not None:
        g = E.to_polynomial(gen_ast, alg)
        p = E.to_polynomial(elem_ast, alg)
        k = args.deg if args.deg is not None else max(canonical_degree(p), canonical_degree(g))
        res = poly_ideal_membership(g, args.side, p, k)
        print(f"member: {'true' if res.member else 'false'}", file=out)
        print(f"degree_bound: {k}", file=out)
        if res.member:
            cert = res.certificate if res.certificate is not None else res.render()
            print(f"certificate: {cert}", file=out)
        return 0
    a = E.eval_element(gen_ast, alg)
    b = E.eval_element(elem_ast, alg)
    res = principal_membership(args.side, a, b)
    print(f"member: {'true' if res.member else 'false'}", file=out)
    if res.member:
        if args.side == "two":
            terms = " + ".join(f"({c})*{alg.basis_names[i]}*g*{alg.basis_names[j]}"
                               for (i, j), c in res.certificate.items())
            print(f"certificate: {terms or '0'}", file=out)
        else:
            print(f"certificate: {res.certificate}", file=out)
    return 0


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _cmd(args, out)
    except UsageError as exc:
        print(f"ERR:USAGE {exc}", file=err)
        return 2
    except ConjalError as exc:
        line = f"ERR:{exc.code} {exc}"
        cls = getattr(exc, "classification", None)
        if cls is not None:
            line += f" (classification: {cls.tag})"
        print(line, file=err)
        return exc.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
