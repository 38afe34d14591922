"""Finite-dimensional algebras with conjugation given by structure constants.

Multiplication is ``e_i e_j = sum_k C[k][i][j] e_k`` with ``e_0 = 1``.  The
conjugation is the diagonal involution given by ``conj_signs`` (normally
``(+1, -1, ..., -1)``), so ``a* = re(a) - im(a)``.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import AlgebraMismatch, BadScalar, NotScalar, UnknownAlgebra
from .report import Report
from .scalar import QQ, Scalar, ScalarRing


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    name: str
    dim: int
    scalar: ScalarRing
    struct_consts: tuple  # C[k][i][j], raw values of ``scalar``
    conj_signs: tuple = None
    basis_names: tuple = None

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ValueError("dimension must be at least 1")
        C = tuple(
            tuple(tuple(self.scalar.coerce(c) for c in row) for row in plane)
            for plane in self.struct_consts
        )
        if len(C) != n or any(len(p) != n or any(len(r) != n for r in p) for p in C):
            raise ValueError(f"struct_consts must be {n}x{n}x{n}")
        object.__setattr__(self, "struct_consts", C)
        signs = self.conj_signs
        if signs is None:
            signs = (1,) + (-1,) * (n - 1)
        signs = tuple(int(s) for s in signs)
        if len(signs) != n or any(s not in (1, -1) for s in signs):
            raise ValueError("conj_signs must be n entries of +1/-1")
        object.__setattr__(self, "conj_signs", signs)
        names = self.basis_names
        if names is None:
            names = ("1",) + tuple(f"e{i}" for i in range(1, n))
        names = tuple(names)
        if len(names) != n or len(set(names)) != n:
            raise ValueError("basis_names must be n distinct names")
        object.__setattr__(self, "basis_names", names)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        return (
            self.name == other.name
            and self.dim == other.dim
            and self.scalar == other.scalar
            and self.struct_consts == other.struct_consts
            and self.conj_signs == other.conj_signs
            and self.basis_names == other.basis_names
        )

    def __hash__(self):
        return hash((self.name, self.dim, self.scalar))

    def __repr__(self):
        return f"AlgebraSpec({self.name!r}, dim={self.dim}, scalar={self.scalar.name})"

    # multiplication table as sparse lists: _table[i][j] = [(k, c), ...]
    @cached_property
    def _table(self):
        n = self.dim
        C = self.struct_consts
        return [
            [[(k, C[k][i][j]) for k in range(n) if C[k][i][j] != 0] for j in range(n)]
            for i in range(n)
        ]

    @cached_property
    def assoc(self) -> bool:
        """Measured associativity on all basis triples."""
        n = self.dim
        e = [self.basis(i) for i in range(n)]
        return all(
            (e[i] * e[j]) * e[k] == e[i] * (e[j] * e[k])
            for i, j, k in itertools.product(range(n), repeat=3)
        )

    @cached_property
    def commutative(self) -> bool:
        n = self.dim
        return all(self._table[i][j] == self._table[j][i] for i in range(n) for j in range(n))

    # construction ---------------------------------------------------------

    def element(self, coords: Iterable) -> Element:
        coords = tuple(self.scalar.coerce(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"{self.name} needs {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def basis(self, i: int) -> Element:
        ring = self.scalar
        return Element(self, tuple(ring.one() if k == i else ring.zero() for k in range(self.dim)))

    def scalar_element(self, c) -> Element:
        ring = self.scalar
        return Element(self, (ring.coerce(c),) + (ring.zero(),) * (self.dim - 1))

    @property
    def zero(self) -> Element:
        return self.scalar_element(0)

    @property
    def one(self) -> Element:
        return self.scalar_element(1)

    def basis_index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def with_scalar(self, ring: ScalarRing, embed=None) -> AlgebraSpec:
        """Same table over another ring; ``embed`` maps raw constants across."""
        embed = embed or (lambda v: v)
        C = tuple(tuple(tuple(embed(c) for c in r) for r in p) for p in self.struct_consts)
        return AlgebraSpec(self.name, self.dim, ring, C, self.conj_signs, self.basis_names)

    def with_conj_signs(self, signs: Sequence[int]) -> AlgebraSpec:
        return AlgebraSpec(
            self.name, self.dim, self.scalar, self.struct_consts, tuple(signs), self.basis_names
        )


def _is_scalar_like(x) -> bool:
    return isinstance(x, (int, Fraction, str, Scalar))


@dataclass(frozen=True, eq=False)
class Element:
    algebra: AlgebraSpec
    coords: tuple = field(default=())

    def _same(self, other: Element):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra.name}/{self.algebra.scalar} vs "
                                  f"{other.algebra.name}/{other.algebra.scalar}")

    def _wrap(self, coords) -> Element:
        red = self.algebra.scalar.reduce
        return Element(self.algebra, tuple(red(c) for c in coords))

    def __add__(self, other):
        if not isinstance(other, Element):
            if not _is_scalar_like(other):
                return NotImplemented
            return self + self.algebra.scalar_element(other)
        self._same(other)
        return self._wrap(x + y for x, y in zip(self.coords, other.coords))

    def __radd__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return self.algebra.scalar_element(other) + self

    def __sub__(self, other):
        if not isinstance(other, Element):
            if not _is_scalar_like(other):
                return NotImplemented
            return self - self.algebra.scalar_element(other)
        self._same(other)
        return self._wrap(x - y for x, y in zip(self.coords, other.coords))

    def __rsub__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return self.algebra.scalar_element(other) - self

    def __neg__(self):
        return self._wrap(-x for x in self.coords)

    def __mul__(self, other):
        if not isinstance(other, Element):
            if not _is_scalar_like(other):
                return NotImplemented
            return self.scale(other)
        self._same(other)
        n = self.algebra.dim
        table = self.algebra._table
        out = [0] * n
        b = other.coords
        for i, ai in enumerate(self.coords):
            if ai == 0:
                continue
            row = table[i]
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                p = ai * bj
                for k, c in row[j]:
                    out[k] += c * p
        return self._wrap(out)

    def __rmul__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return self.scale(other)

    def scale(self, c) -> Element:
        c = self.algebra.scalar.coerce(c)
        return self._wrap(c * x for x in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.algebra.name, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def conj(self) -> Element:
        return Element(self.algebra, tuple(
            c if s == 1 else self.algebra.scalar.reduce(-c)
            for s, c in zip(self.algebra.conj_signs, self.coords)
        ))

    def re_part(self) -> Element:
        z = self.algebra.scalar.zero()
        return Element(self.algebra, (self.coords[0],) + (z,) * (self.algebra.dim - 1))

    def im_part(self) -> Element:
        return Element(self.algebra, (self.algebra.scalar.zero(),) + self.coords[1:])

    def is_scalar(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def norm(self) -> Scalar:
        return norm_form(self)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({self.algebra.name}, {format_element(self)})"


def format_element(a: Element) -> str:
    """Render in the CLI expression grammar, e.g. ``1 - 1/2*i + k``."""
    ring = a.algebra.scalar
    names = a.algebra.basis_names
    parts = []
    for idx, c in enumerate(a.coords):
        if c == 0:
            continue
        neg = _is_negative(ring, c)
        mag = ring.fmt(-c if neg else c)
        if idx == 0 and names[0] == "1":
            body = mag
        elif mag == "1":
            body = names[idx]
        else:
            body = f"{mag}*{names[idx]}"
        parts.append((neg, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _is_negative(ring, c) -> bool:
    # residues are printed as-is in [0, n)
    return ring.kind != "ModN" and c < 0


# functional forms ---------------------------------------------------------

def mul(a: Element, b: Element) -> Element:
    return a * b


def conj(a: Element) -> Element:
    return a.conj()


def re_part(a: Element) -> Element:
    return a.re_part()


def im_part(a: Element) -> Element:
    return a.im_part()


def elem_arith(op: str, a, b=None):
    """Dispatch form: add, sub, neg, scalar_mul (a is the scalar), eq."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "neg":
        return -a
    if op == "scalar_mul":
        return b.scale(a)
    if op == "eq":
        return a == b
    raise ValueError(f"unknown element op {op!r}")


def norm_form(a: Element) -> Scalar:
    """The scalar ``a a*``; raises NotScalar if ``a a*`` leaves the scalar line."""
    p = a * a.conj()
    if not p.is_scalar():
        raise NotScalar(f"a*conj(a) = {p} is not scalar in {a.algebra.name}")
    return Scalar(a.algebra.scalar, p.coords[0])


# validation ---------------------------------------------------------------

def validate_algebra(spec: AlgebraSpec) -> Report:
    """Check unit, involution, anti-homomorphism, scalarity and associativity.

    Scalarity of ``a a*`` for every ``a`` is decided on the basis: expanding
    ``a a* = sum_i a_i^2 e_i e_i* + sum_{i<j} a_i a_j (e_i e_j* + e_j e_i*)``
    shows it is scalar identically in the coordinates iff ``e_i e_i*`` and
    every ``e_i e_j* + e_j e_i*`` (i < j) are scalar.
    """
    n = spec.dim
    C = spec.struct_consts
    e = [spec.basis(i) for i in range(n)]
    rep = Report(f"validate {spec.name} over {spec.scalar.name} (dim {n})")

    bad_unit = [
        (k, i) for k in range(n) for i in range(n)
        if C[k][0][i] != (1 if k == i else 0) or C[k][i][0] != (1 if k == i else 0)
    ]
    rep.add("unit", not bad_unit, f"e0 fails as unit at (k,i)={bad_unit[0]}" if bad_unit else "")

    invol = all(x.conj().conj() == x for x in e)
    rep.add("involution", invol)

    bad_anti = next(
        ((i, j) for i in range(n) for j in range(n)
         if (e[i] * e[j]).conj() != e[j].conj() * e[i].conj()),
        None,
    )
    rep.add("anti_homomorphism", bad_anti is None,
            f"(e{bad_anti[0]} e{bad_anti[1]})* != e{bad_anti[1]}* e{bad_anti[0]}*" if bad_anti else "")

    bad_scal = None
    for i in range(n):
        for j in range(i, n):
            t = e[i] * e[j].conj()
            if i != j:
                t = t + e[j] * e[i].conj()
            if not t.is_scalar():
                bad_scal = (i, j)
                break
        if bad_scal:
            break
    rep.add("norm_scalar", bad_scal is None,
            f"polarized pair {bad_scal} not scalar" if bad_scal else "")

    rep.add("associative", True, "assoc = " + ("true" if spec.assoc else "false"))
    return rep


def is_valid(spec: AlgebraSpec) -> bool:
    return validate_algebra(spec).passed


# catalog ------------------------------------------------------------------

def _from_products(name, names, products, ring, signs=None) -> AlgebraSpec:
    """Build C from ``products[(i, j)] = (coeff, k)`` for non-unit basis pairs."""
    n = len(names)
    C = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        C[i][0][i] = 1
        C[i][i][0] = 1
    for (i, j), terms in products.items():
        for c, k in terms:
            C[k][i][j] += c
    return AlgebraSpec(name, n, ring, C, signs, tuple(names))


def _quaternion_like(name, sq, ring):
    """``sq`` gives (i^2, j^2); k = ij and the rest follows."""
    a, b = sq
    # i^2 = a, j^2 = b, k^2 = -ab, ij = k, ji = -k, jk = -b i, kj = b i, ki = -a j, ik = a j
    p = {
        (1, 1): [(a, 0)], (2, 2): [(b, 0)], (3, 3): [(-a * b, 0)],
        (1, 2): [(1, 3)], (2, 1): [(-1, 3)],
        (2, 3): [(-b, 1)], (3, 2): [(b, 1)],
        (3, 1): [(-a, 2)], (1, 3): [(a, 2)],
    }
    return _from_products(name, ("1", "i", "j", "k"), p, ring)


_OCTONION_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))


def _octonion(ring):
    p = {(i, i): [(-1, 0)] for i in range(1, 8)}
    for a, b, c in _OCTONION_TRIPLES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            p[(x, y)] = [(1, z)]
            p[(y, x)] = [(-1, z)]
    return _from_products("octonion", tuple(f"e{i}" for i in range(8)), p, ring)


CATALOG_NAMES = ("complex", "split_complex", "dual", "quaternion", "split_quaternion", "octonion")


def catalog(name: str, scalar: ScalarRing | str = QQ) -> AlgebraSpec:
    if isinstance(scalar, str):
        scalar = ScalarRing.from_name(scalar)
    if name == "complex":
        return _from_products(name, ("1", "i"), {(1, 1): [(-1, 0)]}, scalar)
    if name == "split_complex":
        return _from_products(name, ("1", "e1"), {(1, 1): [(1, 0)]}, scalar)
    if name == "dual":
        return _from_products(name, ("1", "e1"), {}, scalar)
    if name == "quaternion":
        return _quaternion_like(name, (-1, -1), scalar)
    if name == "split_quaternion":
        return _quaternion_like(name, (-1, 1), scalar)
    if name == "octonion":
        return _octonion(scalar)
    raise UnknownAlgebra(f"unknown algebra {name!r}; known: {', '.join(CATALOG_NAMES)}")


# spec files ---------------------------------------------------------------

def _literal(ring, v):
    s = ring.fmt(v)
    return int(s) if "/" not in s else s


def spec_to_dict(spec: AlgebraSpec) -> dict:
    ring = spec.scalar
    return {
        "name": spec.name,
        "dim": spec.dim,
        "scalar": ring.name,
        "struct_consts": [[[_literal(ring, c) for c in r] for r in p] for p in spec.struct_consts],
        "conj_signs": list(spec.conj_signs),
        "basis": list(spec.basis_names),
    }


def spec_from_dict(d: dict) -> AlgebraSpec:
    try:
        ring = ScalarRing.from_name(str(d["scalar"]))
        C = [[[ring.coerce(c if not isinstance(c, str) else c) for c in r] for r in p]
             for p in d["struct_consts"]]
        return AlgebraSpec(
            str(d["name"]), int(d["dim"]), ring, C,
            d.get("conj_signs"), d.get("basis"),
        )
    except KeyError as exc:
        raise BadScalar(f"spec file missing field {exc}") from None
    except (TypeError, ValueError) as exc:
        raise BadScalar(f"malformed spec: {exc}") from None


def dumps_spec(spec: AlgebraSpec) -> str:
    """JSON text with one structure-constant row per line."""
    d = spec_to_dict(spec)
    lines = ["{"]
    for key, val in d.items():
        if key == "struct_consts":
            blocks = []
            for block in val:
                rows = ",\n    ".join(json.dumps(row) for row in block)
                blocks.append(f"   [\n    {rows}\n   ]")
            lines.append(f' "struct_consts": [\n' + ",\n".join(blocks) + "\n ],")
        else:
            lines.append(f" {json.dumps(key)}: {json.dumps(val)},")
    lines[-1] = lines[-1].rstrip(",")
    lines.append("}")
    return "\n".join(lines)


def loads_spec(text: str) -> AlgebraSpec:
    return spec_from_dict(json.loads(text))


def load_spec(path) -> AlgebraSpec:
    with open(path) as fh:
        return loads_spec(fh.read())
