"""Left, right and two-sided ideals in A, A[x] and A(x).

Membership in A is a linear solve over the fraction-field scalars.  In A[x]
it is decided up to a degree bound on canonical polynomial coordinates: the
candidate set is spanned by ``m g`` (left), ``g m`` (right) or ``m g m'``
(two-sided) for basis monomials ``m``.  A(x) ideals are checked at the level
of values at stored sample points.

"For all b in A" statements are checked on a spanning set: bilinear
conditions on the basis, quadratic ones on ``e_i`` and ``e_i + e_j``.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import AlgebraSpec, Element, norm_form
from .errors import DegreeBoundExceeded, NonAssociative, PreconditionViolated, RootOfDenominator
from .fractions import classify, lift_algebra
from .linalg import SpanSolver
from .polynomial import (
    Monomial, Polynomial, canonical_degree, canonical_form, lift_polynomial, tensor_eq,
)
from .rational import RProd, Sum, from_polynomial, inv_poly, reval
from .report import Report
from .sampling import random_element, rng

LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two"

SIDES = (LEFT, RIGHT, TWO_SIDED)


def _side(side: str) -> str:
    s = side.lower().replace("-", "").replace("_", "")
    if s in ("left", "l"):
        return LEFT
    if s in ("right", "r"):
        return RIGHT
    if s in ("two", "twosided", "both", "t"):
        return TWO_SIDED
    raise ValueError(f"unknown side {side!r}")


def _require_assoc(spec: AlgebraSpec):
    if not spec.assoc:
        raise NonAssociative(f"ideal machinery needs an associative algebra, {spec.name} is not")


def _vec(a: Element) -> dict:
    return {k: c for k, c in enumerate(a.coords) if c != 0}


@dataclass
class Membership:
    member: bool
    certificate: object = None
    coefficients: dict = field(default_factory=dict)

    def __bool__(self):
        return self.member


# ideals of A ----------------------------------------------------------------

def _element_solver(side: str, gens: Sequence[Element]) -> tuple[SpanSolver, dict]:
    alg = gens[0].algebra
    e = [alg.basis(i) for i in range(alg.dim)]
    solver = SpanSolver(alg.scalar)
    products = {}
    for t, g in enumerate(gens):
        if side == LEFT:
            items = (((t, i), e[i] * g) for i in range(alg.dim))
        elif side == RIGHT:
            items = (((t, i), g * e[i]) for i in range(alg.dim))
        else:
            items = (((t, i, j), (e[i] * g) * e[j])
                     for i in range(alg.dim) for j in range(alg.dim))
        for label, val in items:
            products[label] = val
            solver.add(label, _vec(val))
    return solver, products


def _lift_all(*elems: Element):
    lifted = lift_algebra(elems[0].algebra)
    return [lifted.element(a) for a in elems]


def principal_membership(side: str, a: Element, b: Element) -> Membership:
    """Is ``b`` in ``Aa`` (left), ``aA`` (right) or ``AaA`` (two-sided)?

    The certificate is ``x`` with ``x a = b`` / ``a x = b``, or for the
    two-sided case the coefficients ``{(i, j): c}`` of ``b = sum c e_i a e_j``.
    """
    side = _side(side)
    _require_assoc(a.algebra)
    a, b = _lift_all(a, b)
    solver, products = _element_solver(side, [a])
    sol = solver.solve(_vec(b))
    if sol is None:
        return Membership(False)
    alg = a.algebra
    if side == TWO_SIDED:
        coeffs = {(i, j): c for (_, i, j), c in sol.items()}
        check = alg.zero
        for (i, j), c in coeffs.items():
            check = check + products[(0, i, j)].scale(c)
        assert check == b
        return Membership(True, coeffs, coeffs)
    x = alg.element(sol.get((0, i), 0) for i in range(alg.dim))
    assert (x * a if side == LEFT else a * x) == b
    return Membership(True, x, sol)


def ideal_member(side: str, gens: Sequence[Element], b: Element) -> Membership:
    """Membership in the side-ideal generated by several elements."""
    side = _side(side)
    _require_assoc(gens[0].algebra)
    lifted = _lift_all(*gens, b)
    solver, _ = _element_solver(side, lifted[:-1])
    sol = solver.solve(_vec(lifted[-1]))
    return Membership(sol is not None, sol, sol or {})


def _spanning_points(alg: AlgebraSpec):
    e = [alg.basis(i) for i in range(alg.dim)]
    yield from e
    for i, j in itertools.combinations(range(alg.dim), 2):
        yield e[i] + e[j]


def zeros_inclusion_check(a: Element, samples: int = 50) -> Report:
    """Confirm ``Aa`` and ``aA`` lie in the zero set when ``a`` does."""
    alg = a.algebra
    _require_assoc(alg)
    cls = classify(a)
    if not cls.in_zero_set:
        raise PreconditionViolated(f"{a} is invertible, not in the zero set")
    rep = Report(f"zero-set inclusion for a = {a} in {alg.name} ({cls.tag})")
    if cls.tag == "Zero":
        rep.add("trivial", True, "a = 0, so Aa = aA = {0}")
        return rep
    span = list(_spanning_points(alg))
    r = rng(salt=f"zeros:{a}")
    rand = [random_element(alg, r) for _ in range(samples)]
    for label, pts in (("spanning set", span), ("random samples", rand)):
        bad_left = next((b for b in pts if not norm_form(b * a).is_zero()), None)
        bad_right = next((b for b in pts if not norm_form(a * b).is_zero()), None)
        rep.add(f"N(b a) = 0 on {label}", bad_left is None,
                f"b = {bad_left}" if bad_left is not None else f"{len(pts)} points")
        rep.add(f"N(a b) = 0 on {label}", bad_right is None,
                f"b = {bad_right}" if bad_right is not None else f"{len(pts)} points")
    rep.note("N(ba) = N(b)N(a) = 0 by norm multiplicativity in associative algebras; "
             "N(ba) is a quadratic form in b, so vanishing on e_i and e_i + e_j covers all of A")
    return rep


# ideals of A[x] -------------------------------------------------------------

def basis_monomials(alg: AlgebraSpec, degree: int):
    e = [alg.basis(i) for i in range(alg.dim)]
    for idx in itertools.product(range(alg.dim), repeat=degree + 1):
        yield Monomial(tuple(e[i] for i in idx))


def _poly_vec(p: Polynomial) -> dict:
    return canonical_form(p)


@dataclass
class PolyMembership(Membership):
    def render(self) -> str:
        if not self.member:
            return "0"
        terms = []
        for (left, right), c in self.coefficients.items():
            parts = [f"({c})"]
            if left is not None:
                parts.append(f"({left})")
            parts.append("g")
            if right is not None:
                parts.append(f"({right})")
            terms.append("*".join(parts))
        return " + ".join(terms)


def _generator_products(side, g: Polynomial, k: int):
    alg = g.algebra
    dg = canonical_degree(g)
    if dg < 0:
        return
    budget = k - dg
    if side == LEFT:
        for d in range(budget + 1):
            for m in basis_monomials(alg, d):
                yield (m, None), Polynomial(alg, [m]) * g
    elif side == RIGHT:
        for d in range(budget + 1):
            for m in basis_monomials(alg, d):
                yield (None, m), g * Polynomial(alg, [m])
    else:
        for d in range(budget + 1):
            for dl in range(d + 1):
                for ml in basis_monomials(alg, dl):
                    left = Polynomial(alg, [ml]) * g
                    for mr in basis_monomials(alg, d - dl):
                        yield (ml, mr), left * Polynomial(alg, [mr])


def poly_ideal_membership(g: Polynomial, side: str, p: Polynomial, degree_bound: int) -> PolyMembership:
    """Decide whether ``p`` is in the side-ideal generated by ``g`` up to ``degree_bound``.

    The coefficients of the certificate map ``(m, m')`` (``None`` for an
    absent side) to scalars with ``p = sum c m g m'``.
    """
    side = _side(side)
    _require_assoc(g.algebra)
    g, p = lift_polynomial(g), lift_polynomial(p)
    if canonical_degree(p) > degree_bound:
        raise DegreeBoundExceeded(f"deg p = {canonical_degree(p)} > {degree_bound}")
    alg = g.algebra
    solver = SpanSolver(alg.scalar)
    labels, products = [], []
    for label, prod in _generator_products(side, g, degree_bound):
        vec = _poly_vec(prod)
        if _form_degree(vec) > degree_bound:
            continue
        solver.add(len(labels), vec)
        labels.append(label)
        products.append(prod)
    sol = solver.solve(_poly_vec(p))
    if sol is None:
        return PolyMembership(False)
    check = Polynomial(alg)
    for t, c in sol.items():
        check = check + products[t] * alg.scalar_element(c)
    assert tensor_eq(check, p)
    coeffs = {labels[t]: c for t, c in sorted(sol.items())}
    cert = None
    if side == LEFT:
        cert = Polynomial(alg, [m.scale(c) for (m, _), c in coeffs.items()])
    elif side == RIGHT:
        cert = Polynomial(alg, [m.scale(c) for (_, m), c in coeffs.items()])
    return PolyMembership(True, cert, coeffs)


def _form_degree(vec: dict) -> int:
    return max((len(js) for _, js, _ in vec), default=-1)


# the ideal axioms on samples -------------------------------------------------

@dataclass(frozen=True)
class AlgebraAmbient:
    spec: AlgebraSpec


@dataclass(frozen=True)
class PolyAmbient:
    spec: AlgebraSpec
    degree_bound: int


@dataclass(frozen=True)
class RationalAmbient:
    spec: AlgebraSpec
    sample_points: tuple


@dataclass(frozen=True)
class IdealSpec:
    side: str
    generators: tuple
    ambient: object

    def __post_init__(self):
        object.__setattr__(self, "side", _side(self.side))
        object.__setattr__(self, "generators", tuple(self.generators))


def _random_poly(alg, r, degree: int) -> Polynomial:
    monos = []
    for d in range(degree + 1):
        monos.append(Monomial(tuple(random_element(alg, r, 2) for _ in range(d + 1))))
    return Polynomial(alg, monos)


def _act(side, r, m):
    return r * m if side == LEFT else m * r


def ideal_axiom_check(ideal: IdealSpec, samples: int = 100, check_side: Optional[str] = None) -> Report:
    """Sample members and ambient elements; check closure under + and the side action.

    ``check_side`` tests closure from another side than the ideal's own
    (used as a negative control).
    """
    sides = {LEFT: [LEFT], RIGHT: [RIGHT], TWO_SIDED: [LEFT, RIGHT]}[
        _side(check_side) if check_side else ideal.side]
    amb = ideal.ambient
    if isinstance(amb, AlgebraAmbient):
        return _check_algebra_ideal(ideal, samples, sides)
    if isinstance(amb, PolyAmbient):
        return _check_poly_ideal(ideal, samples, sides)
    if isinstance(amb, RationalAmbient):
        return _check_rational_ideal(ideal, samples, sides)
    raise TypeError(f"unknown ambient {amb!r}")


def _check_algebra_ideal(ideal, samples, sides):
    alg = ideal.ambient.spec
    _require_assoc(alg)
    gens = [lift_algebra(g.algebra).element(g) for g in ideal.generators]
    lalg = gens[0].algebra
    solver, products = _element_solver(ideal.side, gens)
    rep = Report(f"{ideal.side} ideal of {alg.name} generated by {', '.join(map(str, gens))}")
    rep.note(f"dimension of ideal: {solver.rank} of {lalg.dim}")
    r = rng(salt=f"ideal:{ideal}")
    labels = list(products)

    def member():
        out = lalg.zero
        for lab in r.sample(labels, min(3, len(labels))):
            out = out + products[lab].scale(r.randint(-3, 3))
        return out

    def inside(v):
        return solver.solve(_vec(v)) is not None

    add_bad = side_bad = None
    for _ in range(samples):
        m1, m2 = member(), member()
        if add_bad is None and not inside(m1 + m2):
            add_bad = (m1, m2)
        x = random_element(lalg, r)
        for s in sides:
            if side_bad is None and not inside(_act(s, x, m1)):
                side_bad = (s, x, m1)
    rep.add("closed under addition", add_bad is None, "" if add_bad is None else f"{add_bad[0]} + {add_bad[1]}")
    rep.add(f"closed under {'/'.join(sides)} multiplication", side_bad is None,
            "" if side_bad is None else f"side {side_bad[0]}: r = {side_bad[1]}, member = {side_bad[2]}")
    return rep


def _check_poly_ideal(ideal, samples, sides):
    alg = ideal.ambient.spec
    k = ideal.ambient.degree_bound
    _require_assoc(alg)
    gens = [lift_polynomial(g) for g in ideal.generators]
    lalg = gens[0].algebra
    rep = Report(f"{ideal.side} ideal of {alg.name}[x] generated by "
                 f"{', '.join(map(str, gens))}, degree <= {k}")
    r = rng(salt=f"polyideal:{ideal}")
    solver = _poly_ideal_solver(gens, ideal.side, k)
    rep.note(f"truncated ideal dimension: {solver.rank}")

    def inside(p):
        return solver.solve(_poly_vec(p)) is not None

    def member():
        g = r.choice(gens)
        budget = max(k - canonical_degree(g), 0)
        q = _random_poly(lalg, r, r.randint(0, budget))
        if ideal.side == RIGHT:
            return g * q
        if ideal.side == LEFT:
            return q * g
        q2 = _random_poly(lalg, r, r.randint(0, budget - q.degree))
        return q * g * q2

    add_bad = side_bad = None
    for _ in range(samples):
        m1, m2 = member(), member()
        if add_bad is None and not inside(m1 + m2):
            add_bad = (m1, m2)
        budget = k - canonical_degree(m1)
        if budget < 0:
            continue
        q = _random_poly(lalg, r, r.randint(0, budget))
        for s in sides:
            prod = q * m1 if s == LEFT else m1 * q
            if side_bad is None and not inside(prod):
                side_bad = (s, q, m1)
    rep.add("closed under addition", add_bad is None, "" if add_bad is None else f"{add_bad[0]} + {add_bad[1]}")
    rep.add(f"closed under {'/'.join(sides)} multiplication", side_bad is None,
            "" if side_bad is None else f"side {side_bad[0]}: q = {side_bad[1]}, member = {side_bad[2]}")
    return rep


def _poly_ideal_solver(gens, side, k) -> SpanSolver:
    solver = SpanSolver(gens[0].algebra.scalar)
    n = 0
    for g in gens:
        for _, prod in _generator_products(side, g, k):
            vec = _poly_vec(prod)
            if _form_degree(vec) <= k:
                solver.add(n, vec)
                n += 1
    return solver


def _random_rational(alg, r):
    x = Polynomial.var(alg)
    num = _random_poly(alg, r, r.randint(0, 1))
    den = _random_poly(alg, r, 1) + x * x
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        inv = inv_poly(den, samples=4)
    return RProd(from_polynomial(num), inv)


def _check_rational_ideal(ideal, samples, sides):
    alg = ideal.ambient.spec
    _require_assoc(alg)
    points = list(ideal.ambient.sample_points)
    gens = []
    for g in ideal.generators:
        gens.append(from_polynomial(g) if isinstance(g, Polynomial) else g)
    rep = Report(f"{ideal.side} ideal of {alg.name}(x), {len(gens)} generator(s), "
                 f"{len(points)} sample points")
    r = rng(salt=f"ratideal:{ideal}")
    lalg = lift_algebra(alg).target

    def member():
        g = r.choice(gens)
        a = _random_rational(alg, r)
        if ideal.side == LEFT:
            return RProd(a, g)
        if ideal.side == RIGHT:
            return RProd(g, a)
        return RProd(RProd(a, g), _random_rational(alg, r))

    def values_ok(expr):
        # at each point the value must lie in the side ideal of A generated by g_t(v)
        for v in points:
            try:
                val = reval(expr, v)
                gvals = [reval(g, v) for g in gens]
            except RootOfDenominator:
                continue
            if all(gv.is_zero() for gv in gvals):
                if not val.is_zero():
                    return False
                continue
            if not ideal_member(ideal.side, [gv for gv in gvals if not gv.is_zero()], val).member:
                return False
        return True

    add_bad = side_bad = None
    zero_bad = None
    gens_in_zero_set = all(
        classify(reval(g, v)).in_zero_set for g in gens for v in points
        if not _is_root_anywhere(g, v)
    )
    for _ in range(samples):
        m1, m2 = member(), member()
        if add_bad is None and not values_ok(Sum(m1, m2)):
            add_bad = (m1, m2)
        a = _random_rational(alg, r)
        for s in sides:
            prod = RProd(a, m1) if s == LEFT else RProd(m1, a)
            if side_bad is None and not values_ok(prod):
                side_bad = s
        if gens_in_zero_set and ideal.side != TWO_SIDED and zero_bad is None:
            for v in points:
                try:
                    if not classify(reval(m1, v)).in_zero_set:
                        zero_bad = v
                        break
                except RootOfDenominator:
                    pass
    rep.add("closed under addition (pointwise)", add_bad is None)
    rep.add(f"closed under {'/'.join(sides)} multiplication (pointwise)", side_bad is None,
            "" if side_bad is None else f"fails from the {side_bad}")
    if gens_in_zero_set and ideal.side != TWO_SIDED:
        rep.add("member values stay in the zero set", zero_bad is None,
                "" if zero_bad is None else f"at {zero_bad}")
    return rep


def _is_root_anywhere(g, v) -> bool:
    try:
        reval(g, v)
        return False
    except RootOfDenominator:
        return True
