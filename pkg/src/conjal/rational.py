"""Rational mappings: expression trees over polynomials closed under inversion.

``(p(x))^{-1}`` is evaluated as ``p(v)* (p(v) p(v)*)^{-1}``, which exists
exactly when ``v`` is not a root of ``p``.  Evaluation happens over the
fraction-field scalars.  No normal form is attempted.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Union

from .algebra import Element, norm_form
from .errors import DegenerateGenerator, RootOfDenominator
from .fractions import classify, lift_algebra
from .polynomial import Polynomial, align_point, lift_polynomial, poly_eval
from .sampling import random_element, rng


@dataclass(frozen=True)
class Const:
    value: Element


@dataclass(frozen=True)
class RVar:
    pass


@dataclass(frozen=True)
class Sum:
    left: "RationalExpr"
    right: "RationalExpr"


@dataclass(frozen=True)
class RProd:
    left: "RationalExpr"
    right: "RationalExpr"


@dataclass(frozen=True, eq=False)
class InvPoly:
    poly: Polynomial
    degenerate: bool = False


RationalExpr = Union[Const, RVar, Sum, RProd, InvPoly]

DEGENERACY_SAMPLES = 64


def inv_poly(p: Polynomial, samples: int = DEGENERACY_SAMPLES, strict: bool = False) -> InvPoly:
    """Build ``p^{-1}``.

    If ``p`` lands in the zero set at every sampled point (all basis elements
    plus ``samples`` seeded random points) the node is flagged degenerate and a
    :class:`DegenerateGenerator` warning is issued (raised when ``strict``).
    """
    alg = p.algebra
    points = [alg.basis(i) for i in range(alg.dim)]
    r = rng(salt="inv_poly")
    points += [random_element(alg, r) for _ in range(samples)]
    degenerate = all(classify(poly_eval(p, v)).in_zero_set for v in points)
    if degenerate:
        msg = f"denominator {p} is in the zero set at all {len(points)} sampled points"
        if strict:
            raise DegenerateGenerator(msg)
        warnings.warn(msg, DegenerateGenerator, stacklevel=2)
    return InvPoly(p, degenerate)


def _invert_value(w: Element, p, v) -> Element:
    n = norm_form(w).value
    if n == 0:
        raise RootOfDenominator(f"{v} is a root of {p}", p, v)
    return w.conj().scale(w.algebra.scalar.inv(n))


def reval(e: RationalExpr, v: Element) -> Element:
    """Evaluate at ``v`` over the fraction-field scalars."""
    v = lift_algebra(v.algebra).element(v)
    return _reval(e, v)


def _reval(e, v: Element) -> Element:
    if isinstance(e, RVar):
        return v
    if isinstance(e, Const):
        return align_point(v.algebra, e.value)
    if isinstance(e, Sum):
        return _reval(e.left, v) + _reval(e.right, v)
    if isinstance(e, RProd):
        return _reval(e.left, v) * _reval(e.right, v)
    if isinstance(e, InvPoly):
        p = lift_polynomial(e.poly)
        return _invert_value(poly_eval(p, align_point(p.algebra, v)), e.poly, v)
    raise TypeError(f"not a rational expression: {e!r}")


def from_polynomial(p: Polynomial) -> RationalExpr:
    """Embed a polynomial as a Sum/Prod tree of constants and the variable."""
    alg = p.algebra
    total = Const(alg.zero)
    for m in p.monomials:
        term = Const(m.coeffs[0])
        for a in m.coeffs[1:]:
            term = RProd(RProd(term, RVar()), Const(a))
        total = Sum(total, term)
    return total


def render(e: RationalExpr) -> str:
    if isinstance(e, RVar):
        return "x"
    if isinstance(e, Const):
        return f"({e.value})"
    if isinstance(e, Sum):
        return f"{render(e.left)} + {render(e.right)}"
    if isinstance(e, RProd):
        return f"({render(e.left)})*({render(e.right)})"
    return f"inv({e.poly})"
