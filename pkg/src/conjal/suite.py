"""Seeded property suites, one per acceptance criterion.

Each suite returns a :class:`~conjal.report.Report`; ``run_suites`` times
them and ``conjal suite`` prints the table.  All checks are exact.
"""

from __future__ import annotations

import io
import itertools
import time
from dataclasses import dataclass
from typing import Callable

from .algebra import CATALOG_NAMES, catalog, norm_form, validate_algebra
from .errors import NotRepresentable
from .fractions import (
    INVERTIBLE, ZERO, ZERO_DIVISOR, classify, fraction_equiv_scale, invert, left_fraction,
    lift_algebra, lift_element,
)
from .ideal import poly_ideal_membership, principal_membership, zeros_inclusion_check
from .polynomial import (
    Leaf, Monomial, Polynomial, Prod, Var, conj_as_polynomial, flatten, from_tensor, lift_polynomial,
    mono_norm_poly, poly_conj, poly_eval, substitute_conj, tensor_eq, tensor_eval, to_tensor,
    tree_eval,
)
from .report import Report
from .sampling import all_elements, random_element, random_imaginary, random_nonzero, rng
from .scalar import ModN, ZZ



@dataclass(frozen=True)
class SuiteConfig:
    """Sample sizes; the defaults are the acceptance sizes."""
    pairs: int = 500
    chains: int = 100
    trees: int = 50
    tree_points: int = 50
    poly_samples: int = 50
    norm_pairs: int = 200
    scale_triples: int = 200
    subst_points: int = 200
    cert_trials: int = 40
    random_corpus: int = 40
ASSOCIATIVE = ("complex", "split_complex", "dual", "quaternion", "split_quaternion")

SUITES: dict[str, Callable[[SuiteConfig], Report]] = {}


def suite(name):
    def deco(fn):
        SUITES[name] = fn
        return fn
    return deco


def _first(pred, items):
    return next((x for x in items if not pred(x)), None)


@suite("conj_axioms")
def conj_axioms(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("conjugation axioms: (ab)* = b*a*, a** = a, aa* = a*a scalar")
    for name in CATALOG_NAMES:
        A = catalog(name, ZZ)
        e = [A.basis(i) for i in range(A.dim)]
        r = rng(salt=f"conj:{name}")
        pairs = list(itertools.product(e, repeat=2))
        pairs += [(random_element(A, r), random_element(A, r)) for _ in range(cfg.pairs)]

        def ok(ab):
            a, b = ab
            aa = a * a.conj()
            return ((a * b).conj() == b.conj() * a.conj() and a.conj().conj() == a
                    and aa == a.conj() * a and aa.im_part().is_zero())

        bad = _first(ok, pairs)
        rep.add(name, bad is None, f"{len(pairs)} pairs" if bad is None else f"fails at {bad}")
    return rep


@suite("im_products")
def im_products(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("imaginary products: (ab)* = ba, re(ab) = re(ba), im(ab) = -im(ba)")
    for name in CATALOG_NAMES:
        A = catalog(name, ZZ)
        r = rng(salt=f"im:{name}")

        def ok(ab):
            a, b = ab
            x, y = a * b, b * a
            return x.conj() == y and x.re_part() == y.re_part() and x.im_part() == -y.im_part()

        pairs = [(random_imaginary(A, r), random_imaginary(A, r)) for _ in range(cfg.pairs)]
        bad = _first(ok, pairs)
        rep.add(name, bad is None, f"{len(pairs)} pairs" if bad is None else f"fails at {bad}")
    return rep


def _prod(xs):
    out = xs[0]
    for x in xs[1:]:
        out = out * x
    return out


@suite("norm_mult")
def norm_mult(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("norm multiplicativity: (ab)(ab)* = (aa*)(bb*) and m-factor chains")
    for name in CATALOG_NAMES:
        A = catalog(name, ZZ)
        e = [A.basis(i) for i in range(A.dim)]
        r = rng(salt=f"norm:{name}")
        pairs = list(itertools.product(e, repeat=2))
        pairs += [(random_element(A, r), random_element(A, r)) for _ in range(cfg.pairs)]
        bad = _first(lambda ab: (ab[0] * ab[1]) * (ab[0] * ab[1]).conj()
                     == (ab[0] * ab[0].conj()) * (ab[1] * ab[1].conj()), pairs)
        chains = [[random_element(A, r) for _ in range(m)] for m in (3, 4) for _ in range(cfg.chains)]
        bad_chain = _first(lambda xs: _prod(xs) * _prod(xs).conj()
                           == _prod([x * x.conj() for x in xs]), chains)
        if A.assoc:
            rep.add(f"{name} pairs", bad is None, f"{len(pairs)} pairs" if bad is None else f"fails at {bad}")
            rep.add(f"{name} chains m=3,4", bad_chain is None,
                    f"{len(chains)} chains" if bad_chain is None else f"fails at {bad_chain}")
        else:
            outcome = "holds" if bad is None and bad_chain is None else "fails"
            rep.note(f"{name} (nonassociative, report only): identity {outcome} on "
                     f"{len(pairs)} pairs and {len(chains)} left-nested chains")
    return rep


def _oracle(A):
    elems = list(all_elements(A))
    one, zero = A.one, A.zero
    rows = []
    for a in elems:
        has_inv = any(a * b == one and b * a == one for b in elems)
        zd = any(not b.is_zero() and ((a * b).is_zero() or (b * a).is_zero()) for b in elems)
        rows.append((a, has_inv, zd))
    return rows


@suite("invert_oracle")
def invert_oracle(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("classify vs brute-force inverse / annihilator search over Z/3")
    for name in ("quaternion", "split_complex", "dual", "complex", "split_quaternion"):
        A = catalog(name, ModN(3))
        bad = None
        count = 0
        for a, has_inv, zd in _oracle(A):
            count += 1
            c = classify(a)
            if c.tag == ZERO:
                good = a.is_zero()
            elif c.tag == INVERTIBLE:
                good = has_inv and not zd
            else:
                good = (not a.is_zero() and zd and not has_inv
                        and not c.witness.is_zero() and (a * c.witness).is_zero())
            if not good:
                bad = (a, c.tag, has_inv, zd)
                break
        rep.add(name, bad is None, f"{count} elements" if bad is None else f"misclassified {bad}")
    return rep


@suite("inversion")
def inversion(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("inversion: a a^-1 = a^-1 a = 1 with a^-1 = N(a)^-1 a*")
    A = catalog("quaternion", ZZ)
    r = rng(salt="inversion")
    bad, n = None, 0
    while n < cfg.pairs:
        a = random_element(A, r)
        if classify(a).tag != INVERTIBLE:
            continue
        n += 1
        inv = invert(a)
        la = lift_element(a)
        expected = la.conj().scale(la.algebra.scalar.inv(norm_form(la).value))
        one = la.algebra.one
        if not (inv == expected and la * inv == one and inv * la == one
                and invert(inv) == la):
            bad = a
            break
    rep.add("quaternion over Z", bad is None, f"{n} elements" if bad is None else f"fails at {bad}")
    return rep


@suite("fraction_lift")
def fraction_lift(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("lift Z -> Q: structure constants coincide, lift is a homomorphism")
    for name in CATALOG_NAMES:
        A = catalog(name, ZZ)
        L = lift_algebra(A)
        B = L.target
        consts = all(B.struct_consts[k][i][j] == L.embed(A.struct_consts[k][i][j])
                     for k in range(A.dim) for i in range(A.dim) for j in range(A.dim))
        profile = ([c.passed for c in validate_algebra(A).checks]
                   == [c.passed for c in validate_algebra(B).checks] and A.assoc == B.assoc)
        r = rng(salt=f"lift:{name}")
        pairs = [(random_element(A, r), random_element(A, r)) for _ in range(cfg.pairs)]
        f = L.element
        bad = _first(lambda ab: f(ab[0] + ab[1]) == f(ab[0]) + f(ab[1])
                     and f(ab[0] * ab[1]) == f(ab[0]) * f(ab[1])
                     and f(ab[0].conj()) == f(ab[0]).conj()
                     and classify(ab[0]).tag == classify(f(ab[0])).tag, pairs)
        rep.add(f"{name} constants", consts)
        rep.add(f"{name} validation profile", profile)
        rep.add(f"{name} homomorphism", bad is None,
                f"{len(pairs)} pairs" if bad is None else f"fails at {bad}")
    A = catalog("quaternion", ZZ)
    r = rng(salt="dscale")
    n, bad = 0, None
    while n < cfg.scale_triples:
        d = A.scalar_element(r.choice([x for x in range(-5, 6) if x]))
        a, b = random_element(A, r), random_element(A, r)
        if classify(a).tag != INVERTIBLE:
            continue
        n += 1
        if not fraction_equiv_scale(d, a, b):
            bad = (d, a, b)
            break
    rep.add("d-scaling of left fractions", bad is None, f"{n} triples" if bad is None else f"fails at {bad}")
    return rep


def random_tree(A, r, depth=4):
    if depth == 0 or r.random() < 0.3:
        return Var() if r.random() < 0.5 else Leaf(random_element(A, r, 2))
    return Prod(random_tree(A, r, depth - 1), random_tree(A, r, depth - 1))


def random_poly(A, r, max_terms=3, max_degree=3):
    monos = []
    for _ in range(r.randint(1, max_terms)):
        d = r.randint(0, max_degree)
        monos.append(Monomial(tuple(random_element(A, r, 2) for _ in range(d + 1))))
    return Polynomial(A, monos)


@suite("polynomial")
def polynomial_layer(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("polynomials: flatten, tensor round trip, conjugation, norm polynomial")
    for name in ("quaternion", "split_quaternion"):
        A = catalog(name, ZZ)
        r = rng(salt=f"poly:{name}")
        bad = None
        for _ in range(cfg.trees):
            t = random_tree(A, r)
            m = flatten(t, A)
            pts = [random_element(A, r) for _ in range(cfg.tree_points)]
            if not all(tree_eval(t, v) == poly_eval(m, v) for v in pts):
                bad = t
                break
        rep.add(f"{name} flatten/eval {cfg.trees}x{cfg.tree_points}", bad is None, "" if bad is None else f"tree {bad}")

        bad = None
        for _ in range(cfg.poly_samples):
            p = random_poly(A, r)
            T = to_tensor(p)
            v = random_element(A, r)
            if not (tensor_eq(from_tensor(T), p) and tensor_eval(T, v) == poly_eval(p, v)):
                bad = p
                break
        rep.add(f"{name} tensor round trip", bad is None, "" if bad is None else f"p = {bad}")

        bad = None
        for _ in range(cfg.poly_samples):
            p, q = random_poly(A, r, 2, 2), random_poly(A, r, 2, 2)
            pc, qc, pqc = poly_conj(p), poly_conj(q), poly_conj(p * q)
            v = random_element(A, r)
            if not (poly_eval(pqc, v) == poly_eval(qc, v) * poly_eval(pc, v)
                    and poly_eval(pc, v) == poly_eval(p, v).conj()):
                bad = (p, q)
                break
        rep.add(f"{name} conjugation anti-homomorphism", bad is None, "" if bad is None else f"{bad}")

        bad = None
        for _ in range(cfg.norm_pairs):
            m = Monomial(tuple(random_element(A, r, 2) for _ in range(r.randint(1, 4))))
            c, k = mono_norm_poly(m)
            v = random_element(A, r)
            w = poly_eval(m, v)
            nv = norm_form(v).value
            if w * w.conj() != A.scalar_element(c.value * nv ** k):
                bad = (m, v)
                break
        rep.add(f"{name} p(v)p(v)* = c N(v)^k, {cfg.norm_pairs} pairs", bad is None, "" if bad is None else f"{bad}")
    return rep


@suite("conj_repr")
def conj_repr(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("conjugation as a degree-1 polynomial x* = sum u x v")
    Q = catalog("quaternion", ZZ)
    rp = conj_as_polynomial(Q)
    B = rp.algebra
    e = [B.basis(i) for i in range(4)]
    rep.add("quaternion verified on basis", all(rp.apply(x) == x.conj() for x in e))
    x = Polynomial.var(B)
    half = B.scalar_element("-1/2")
    expected = (x + e[1] * x * e[1] + e[2] * x * e[2] + e[3] * x * e[3]) * half
    rep.add("quaternion matches -(1/2)(x + ixi + jxj + kxk)", tensor_eq(rp.as_polynomial(), expected),
            str(rp.as_polynomial()))
    try:
        conj_as_polynomial(catalog("complex", ZZ))
        rep.add("complex not representable", False, "a representation was returned")
    except NotRepresentable as exc:
        rep.add("complex not representable", True, str(exc))
    r = rng(salt="subst")
    bad = None
    for _ in range(cfg.subst_points):
        p = random_poly(Q, r, 2, 2)
        mixed = p * poly_conj(random_poly(Q, r, 2, 1)) + poly_conj(p)
        pure = substitute_conj(mixed, rp)
        v = random_element(Q, r)
        if poly_eval(pure, v) != lift_element(poly_eval(mixed, v)):
            bad = mixed
            break
    rep.add(f"substitute_conj pointwise, {cfg.subst_points} points", bad is None, "" if bad is None else str(bad))
    return rep


@suite("ideals")
def ideals(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report("ideals: certificates, zero-set inclusion, A[x] membership controls")
    r = rng(salt="ideals")
    bad = None
    count = 0
    for name in ASSOCIATIVE:
        A = catalog(name, ZZ)
        for _ in range(cfg.cert_trials):
            a, b = random_element(A, r), random_element(A, r)
            if r.random() < 0.5:
                b = random_element(A, r) * a if r.random() < 0.5 else a * random_element(A, r)
            for side in ("left", "right", "two"):
                res = principal_membership(side, a, b)
                if not res.member:
                    continue
                count += 1
                la, lb = lift_element(a), lift_element(b)
                if side == "left":
                    ok = res.certificate * la == lb
                elif side == "right":
                    ok = la * res.certificate == lb
                else:
                    B = la.algebra
                    tot = B.zero
                    for (i, j), c in res.certificate.items():
                        tot = tot + (B.basis(i) * la * B.basis(j)).scale(c)
                    ok = tot == lb
                if not ok:
                    bad = (name, side, a, b)
    rep.add("principal certificates reconstruct b", bad is None, f"{count} certificates")

    for name in ("split_complex", "dual"):
        A = catalog(name, ModN(3))
        zs = [a for a in all_elements(A) if classify(a).in_zero_set]
        fails = [a for a in zs if not zeros_inclusion_check(a).passed]
        rep.add(f"zero-set inclusion, all of A0 in {name} over Z/3", not fails,
                f"{len(zs)} elements" if not fails else f"fails at {fails[0]}")

    Q = catalog("quaternion", ZZ)
    i = Q.basis(1)
    x = Polynomial.var(Q)
    m = poly_ideal_membership(x, "left", x * i * x, 3)
    rep.add("x*i*x in A[x] x (deg 3)", m.member and tensor_eq(
        m.certificate * lift_polynomial(x), lift_polynomial(x * i * x)), str(m.certificate))
    rep.add("1 not in A[x] x (deg 3)", not poly_ideal_membership(x, "left", Polynomial.const(Q.one), 3).member)
    zero = Polynomial(Q)
    rep.add("ideal of g = 0 contains 0 only",
            poly_ideal_membership(zero, "left", zero, 3).member
            and not poly_ideal_membership(zero, "left", x, 3).member)
    j = Q.basis(2)
    target = x * x * i + j * x * i
    mono = all(
        poly_ideal_membership(x * i, side, target, k).member
        for side in ("left", "two") for k in (2, 3)
    )
    rep.add("membership persists as the degree bound grows", mono)
    return rep


CORPUS = [
    "i*j + 2", "~(1+i)", "1", "x", "~x", "x*x", "i*x*j", "x - i", "-i", "-(1 + j)*k",
    "1/2*i - 3/4*k", "inv(x)", "inv(x - i)*3", "x*inv(x*x + 1)", "(x)", "((i))", "~~j",
    "2i + 3j", "x*~x", "~x*x - x*~x", "1 + i + j + k", "inv(2)", "i*(j*k)", "(i*j)*k",
    "x*(1 + k)*x", "0", "10/3", "~(x*i)", "inv(x*x*x - 1)", "j - -k",
]


def _random_ast_src(r, depth=3):
    if depth == 0 or r.random() < 0.25:
        return r.choice(["x", "~x", "1", "2", "3/5", "i", "j", "k"])
    kind = r.choice(["+", "-", "*", "~", "()", "neg", "inv"])
    if kind in "+-*":
        return f"{_random_ast_src(r, depth - 1)} {kind} {_random_ast_src(r, depth - 1)}"
    if kind == "~":
        return "~" + _random_ast_src(r, depth - 1)
    if kind == "neg":
        return "-" + _random_ast_src(r, depth - 1)
    if kind == "inv":
        return f"inv({_random_ast_src(r, depth - 1)})"
    return f"({_random_ast_src(r, depth - 1)})"


@suite("cli")
def cli_suite(cfg: SuiteConfig = SuiteConfig()) -> Report:
    from . import expr as E
    from .cli import run

    rep = Report("CLI: parser round trip, CLI output equals library output")
    Q = catalog("quaternion")
    r = rng(salt="corpus")
    corpus = CORPUS + [_random_ast_src(r) for _ in range(cfg.random_corpus)]
    bad = None
    for src in corpus:
        ast = E.parse_expr(src, Q)
        if E.parse_expr(E.render(ast), Q) != ast or E.render(E.parse_expr(E.render(ast), Q)) != E.render(ast):
            bad = src
            break
    rep.add(f"round trip on {len(corpus)} expressions", bad is None, "" if bad is None else bad)

    def cli(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), out, err)
        return code, out.getvalue().strip(), err.getvalue().strip()

    mismatches = []
    for name in ("quaternion", "split_complex", "dual", "split_quaternion"):
        A = catalog(name)
        rr = rng(salt=f"cli:{name}")
        for _ in range(10):
            a = random_element(A, rr)
            src = str(a)
            lib = E.eval_element(E.parse_expr(src, A), A)
            if lib != a:
                mismatches.append(("parse", name, src))
            code, out, _ = cli("eval", "-a", name, src)
            if code != 0 or out != str(a):
                mismatches.append(("eval", name, src, out))
            code, out, _ = cli("classify", "-a", name, src)
            if out != str(classify(a)):
                mismatches.append(("classify", name, src, out))
            code, out, err = cli("invert", "-a", name, src)
            if classify(a).tag == INVERTIBLE:
                if code != 0 or out != str(invert(a)):
                    mismatches.append(("invert", name, src, out))
            elif code != 1 or not err.startswith("ERR:NOT_INVERTIBLE"):
                mismatches.append(("invert-error", name, src, err))
    rep.add("eval/classify/invert equal library results", not mismatches,
            "" if not mismatches else str(mismatches[0]))
    code, out, _ = cli("eval", "-a", "quaternion", "i*j")
    rep.add("eval i*j = k", code == 0 and out == "k", out)
    code, _, err = cli("invert", "-a", "split_complex", "1+e1")
    rep.add("invert 1+e1 in split_complex is a domain error", code == 1 and "ERR:NOT_INVERTIBLE" in err
            and ZERO_DIVISOR in err, err)
    code, _, err = cli("eval", "-a", "quaternion", "q*")
    rep.add("syntax errors exit 2", code == 2 and err.startswith("ERR:SYNTAX"), err)
    return rep


def run_suites(only=None, cfg: SuiteConfig = SuiteConfig()):
    names = list(SUITES) if not only else list(only)
    results = []
    for name in names:
        if name not in SUITES:
            rep = Report(f"unknown suite {name!r}")
            rep.add("exists", False, f"known: {', '.join(SUITES)}")
            results.append((name, rep, 0.0))
            continue
        t0 = time.perf_counter()
        rep = SUITES[name](cfg)
        results.append((name, rep, time.perf_counter() - t0))
    return results


def print_table(results, out):
    width = max((len(n) for n, _, _ in results), default=5)
    for name, rep, secs in results:
        status = "PASS" if rep.passed else "FAIL"
        print(f"{name:<{width}}  {status}  {secs:6.2f}s  {rep.title}", file=out)
        for c in rep.checks:
            mark = "ok " if c.passed else "BAD"
            print(f"{'':<{width}}    {mark} {c.label}" + (f" ({c.detail})" if c.detail else ""), file=out)
        for n in rep.notes:
            print(f"{'':<{width}}    note: {n}", file=out)
    total = sum(1 for _, rep, _ in results if rep.passed)
    print(f"{total}/{len(results)} suites passed", file=out)
