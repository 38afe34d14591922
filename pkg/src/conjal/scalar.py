"""Exact scalar rings: the integers, the rationals and residues modulo n.

A :class:`ScalarRing` works on *raw* values (``int`` for ``Z`` and ``Z/n``,
``Fraction`` for ``Q``) so the element arithmetic in :mod:`conjal.algebra`
can run on plain Python numbers and reduce once at the end.  :class:`Scalar`
wraps a raw value together with its ring for the public API.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import BadScalar, NotEntire, RingMismatch

INTEGERS = "Integers"
RATIONALS = "Rationals"
MODN = "ModN"

_INT_RE = re.compile(r"^-?[0-9]+$")
_RAT_RE = re.compile(r"^-?[0-9]+/[0-9]+$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ScalarRing:
    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in (INTEGERS, RATIONALS, MODN):
            raise ValueError(f"unknown scalar ring kind {self.kind!r}")
        if self.kind == MODN and self.n < 1:
            raise ValueError("ModN needs a positive modulus")

    @classmethod
    def from_name(cls, name: str) -> ScalarRing:
        """Parse the selector strings ``Z``, ``Q`` and ``Z/<n>``."""
        name = name.strip()
        if name == "Z":
            return ZZ
        if name == "Q":
            return QQ
        m = re.fullmatch(r"Z/([0-9]+)", name)
        if m and int(m.group(1)) >= 1:
            return ModN(int(m.group(1)))
        raise BadScalar(f"unknown scalar ring {name!r}")

    @property
    def name(self) -> str:
        if self.kind == INTEGERS:
            return "Z"
        if self.kind == RATIONALS:
            return "Q"
        return f"Z/{self.n}"

    def __str__(self):
        return self.name

    @property
    def entire(self) -> bool:
        if self.kind == MODN:
            return _is_prime(self.n)
        return True

    @property
    def is_field(self) -> bool:
        if self.kind == INTEGERS:
            return False
        return self.entire

    # raw-value arithmetic ---------------------------------------------------

    def reduce(self, v):
        if self.kind == MODN:
            return v % self.n
        if self.kind == RATIONALS:
            return v if type(v) is Fraction else Fraction(v)
        return v

    def coerce(self, x):
        """Bring an int, Fraction, literal string or Scalar into this ring."""
        if isinstance(x, Scalar):
            if x.ring != self:
                raise RingMismatch(f"{x.ring} scalar used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return self.reduce(x)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return self.reduce(x.numerator)
            if self.kind == INTEGERS:
                raise BadScalar(f"{x} is not an integer")
            if self.kind == RATIONALS:
                return x
            return self.reduce(x.numerator) * self.inv(self.reduce(x.denominator)) % self.n
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def parse(self, text: str):
        text = text.strip()
        if _INT_RE.match(text):
            return self.reduce(int(text))
        if _RAT_RE.match(text):
            p, q = text.split("/")
            if int(q) == 0:
                raise BadScalar(f"zero denominator in {text!r}")
            try:
                return self.coerce(Fraction(int(p), int(q)))
            except ZeroDivisionError:
                raise BadScalar(f"{text!r} has no value in {self}") from None
        raise BadScalar(f"bad scalar literal {text!r}")

    def fmt(self, v) -> str:
        return str(v)

    def zero(self):
        return self.reduce(0)

    def one(self):
        return self.reduce(1)

    def inv(self, v):
        """Multiplicative inverse of a raw value; ZeroDivisionError if none."""
        if self.kind == RATIONALS:
            if v == 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 / Fraction(v)
        if self.kind == INTEGERS:
            if v in (1, -1):
                return v
            raise ZeroDivisionError(f"{v} is not a unit in Z")
        try:
            return pow(v, -1, self.n)
        except ValueError:
            raise ZeroDivisionError(f"{v} is not a unit in {self}") from None

    def embed(self, v):
        """The embedding of a raw value into :func:`fraction_field` of this ring."""
        if self.kind == INTEGERS:
            return Fraction(v)
        return v

    def __call__(self, x) -> Scalar:
        return Scalar(self, self.coerce(x))


def ModN(n: int) -> ScalarRing:
    return ScalarRing(MODN, n)


ZZ = ScalarRing(INTEGERS)
QQ = ScalarRing(RATIONALS)


@dataclass(frozen=True)
class Scalar:
    ring: ScalarRing
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        return self.ring.coerce(other)

    def __add__(self, other):
        return Scalar(self.ring, self.ring.reduce(self.value + self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.ring, self.ring.reduce(self.value - self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.ring, self.ring.reduce(self._other(other) - self.value))

    def __mul__(self, other):
        return Scalar(self.ring, self.ring.reduce(self.value * self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.ring, self.ring.reduce(-self.value))

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            try:
                return self.value == self._other(other)
            except (BadScalar, ZeroDivisionError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def inverse(self) -> Scalar:
        return Scalar(self.ring, self.ring.inv(self.value))

    def __str__(self):
        return self.ring.fmt(self.value)

    def __repr__(self):
        return f"Scalar({self.ring.name}, {self.ring.fmt(self.value)})"


Number = Union[int, Fraction, Scalar, str]


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None):
    """Dispatch form of the scalar operations: add, sub, mul, neg, eq, is_zero."""
    if b is not None and a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "eq":
        return a == b
    if op == "is_zero":
        return a.is_zero()
    raise ValueError(f"unknown scalar op {op!r}")


def fraction_field(ring: ScalarRing) -> ScalarRing:
    """Field of fractions of an entire ring; fields map to themselves."""
    if not ring.entire:
        raise NotEntire(f"{ring} has zero divisors")
    if ring.kind == INTEGERS:
        return QQ
    return ring
