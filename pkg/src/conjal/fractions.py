"""Zero set / invertible set, inversion through the conjugate, and the algebra
of fractions obtained by passing to the field of fractions of the scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import AlgebraSpec, Element, norm_form
from .errors import NotInvertible, PreconditionViolated
from .scalar import fraction_field

ZERO = "Zero"
ZERO_DIVISOR = "ZeroDivisor"
INVERTIBLE = "Invertible"


@dataclass(frozen=True)
class Classification:
    tag: str
    witness: Optional[Element] = None

    @property
    def in_zero_set(self) -> bool:
        return self.tag != INVERTIBLE

    def __str__(self):
        if self.witness is not None:
            return f"{self.tag} (witness {self.witness})"
        return self.tag


def classify(a: Element) -> Classification:
    """Zero, zero divisor (witness ``a*``, since ``a a* = 0``) or invertible."""
    if a.is_zero():
        return Classification(ZERO)
    if norm_form(a).is_zero():
        return Classification(ZERO_DIVISOR, a.conj())
    return Classification(INVERTIBLE)


@dataclass(frozen=True)
class LiftedAlgebra:
    source: AlgebraSpec
    target: AlgebraSpec
    embed: Callable

    def element(self, a: Element) -> Element:
        if a.algebra is self.target:
            return a
        if self.target is not self.source and a.algebra == self.target:
            return Element(self.target, a.coords)
        if a.algebra is not self.source:
            self.source.zero._same(a)
        return Element(self.target, tuple(self.embed(c) for c in a.coords))


def lift_algebra(spec: AlgebraSpec) -> LiftedAlgebra:
    """The same structure constants over the field of fractions of the scalars."""
    cached = spec.__dict__.get("_lifted")
    if cached is not None:
        return cached
    field = fraction_field(spec.scalar)
    if field == spec.scalar:
        lifted = LiftedAlgebra(spec, spec, lambda v: v)
    else:
        embed = spec.scalar.embed
        lifted = LiftedAlgebra(spec, spec.with_scalar(field, embed), embed)
    spec.__dict__["_lifted"] = lifted
    return lifted


def lift_element(a: Element) -> Element:
    return lift_algebra(a.algebra).element(a)


def invert(a: Element) -> Element:
    """``a^{-1} = N(a)^{-1} a*`` computed in the lifted algebra."""
    cls = classify(a)
    if cls.tag != INVERTIBLE:
        raise NotInvertible(f"{a} is {cls.tag}", cls)
    b = lift_element(a)
    ring = b.algebra.scalar
    n = norm_form(b).value
    return b.conj().scale(ring.inv(n))


def left_fraction(a: Element, b: Element) -> Element:
    """``a^{-1} b``."""
    return invert(a) * lift_element(b)


def right_fraction(b: Element, a: Element) -> Element:
    """``b a^{-1}``."""
    return lift_element(b) * invert(a)


def fraction_equiv_scale(d: Element, a: Element, b: Element) -> bool:
    """Whether scaling numerator and denominator by a scalar ``d`` keeps the left fraction."""
    if not d.is_scalar() or d.is_zero():
        raise PreconditionViolated(f"d = {d} must be a nonzero scalar")
    return left_fraction(d * a, d * b) == left_fraction(a, b)
