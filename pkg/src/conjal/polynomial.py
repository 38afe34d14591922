"""One-variable noncommutative polynomials over an algebra with conjugation.

Over an associative algebra every monomial of degree k is interleaved,
``a_0 x a_1 x ... x a_k``, and is stored as the coefficient list
``[a_0, ..., a_k]``.  Products splice at the boundary coefficient.  Equality is
decided on the multilinear expansion in basis coordinates
(:class:`DegreeTensor`), which is the canonical form.

Nonassociative algebras only get :class:`MonomialTree` values, evaluated with
their own parenthesization.

A :class:`MixedPolynomial` may additionally use the conjugated variable
``x~`` (printed ``~x``), which evaluates to ``v*`` at the point ``v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .algebra import AlgebraSpec, Element, format_element, norm_form
from .errors import AlgebraMismatch, NonAssociative, NotRepresentable
from .fractions import classify, lift_algebra
from .linalg import SpanSolver
from .scalar import Scalar


def _require_assoc(spec: AlgebraSpec):
    if not spec.assoc:
        raise NonAssociative(f"{spec.name} is not associative; use MonomialTree")


# trees --------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    coeff: Element


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Prod:
    left: "MonomialTree"
    right: "MonomialTree"


MonomialTree = Union[Leaf, Var, Prod]


def tree_degree(t: MonomialTree) -> int:
    if isinstance(t, Var):
        return 1
    if isinstance(t, Leaf):
        return 0
    return tree_degree(t.left) + tree_degree(t.right)


def tree_eval(t: MonomialTree, v: Element) -> Element:
    if isinstance(t, Var):
        return v
    if isinstance(t, Leaf):
        return t.coeff
    return tree_eval(t.left, v) * tree_eval(t.right, v)


def _tree_algebra(t: MonomialTree):
    if isinstance(t, Leaf):
        return t.coeff.algebra
    if isinstance(t, Prod):
        return _tree_algebra(t.left) or _tree_algebra(t.right)
    return None


def flatten(t: MonomialTree, algebra: AlgebraSpec | None = None) -> Monomial:
    """Interleaved form of a tree; needs an associative ambient."""
    algebra = algebra or _tree_algebra(t)
    if algebra is None:
        raise ValueError("tree without coefficients needs an explicit algebra")
    _require_assoc(algebra)

    def go(node):
        if isinstance(node, Leaf):
            return (node.coeff,)
        if isinstance(node, Var):
            return (algebra.one, algebra.one)
        left, right = go(node.left), go(node.right)
        return left[:-1] + (left[-1] * right[0],) + right[1:]

    return Monomial(go(t))


# interleaved monomials and polynomials -------------------------------------

@dataclass(frozen=True)
class Monomial:
    coeffs: tuple
    marks: tuple = None  # marks[s] is True when the s-th variable is x~

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a monomial has at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)
        marks = self.marks
        marks = (False,) * (len(coeffs) - 1) if marks is None else tuple(bool(m) for m in marks)
        if len(marks) != len(coeffs) - 1:
            raise ValueError("need one mark per variable slot")
        object.__setattr__(self, "marks", marks)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def algebra(self) -> AlgebraSpec:
        return self.coeffs[0].algebra

    @property
    def mixed(self) -> bool:
        return any(self.marks)

    def eval(self, v: Element) -> Element:
        out = self.coeffs[0]
        vc = v.conj() if self.mixed else None
        for mark, a in zip(self.marks, self.coeffs[1:]):
            out = out * (vc if mark else v) * a
        return out

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(
            self.coeffs[:-1] + (self.coeffs[-1] * other.coeffs[0],) + other.coeffs[1:],
            self.marks + other.marks,
        )

    def scale(self, c) -> Monomial:
        return Monomial((self.coeffs[0].scale(c),) + self.coeffs[1:], self.marks)

    def __str__(self):
        parts = []
        for s, a in enumerate(self.coeffs):
            if s > 0:
                parts.append("~x" if self.marks[s - 1] else "x")
            if not (a == a.algebra.one) or len(self.coeffs) == 1:
                parts.append(_factor_str(a))
        return "*".join(parts)


def _factor_str(a: Element) -> str:
    s = format_element(a)
    if " " in s or s.startswith("-"):
        return f"({s})"
    return s


class Polynomial:
    """Sum of interleaved monomials over one associative algebra."""

    def __init__(self, algebra: AlgebraSpec, monomials: Iterable[Monomial] = ()):
        _require_assoc(algebra)
        self.algebra = algebra
        monos = tuple(monomials)
        for m in monos:
            for a in m.coeffs:
                if a.algebra is not algebra and a.algebra != algebra:
                    raise AlgebraMismatch(f"coefficient from {a.algebra.name} in {algebra.name}")
        if type(self) is Polynomial and any(m.mixed for m in monos):
            raise ValueError("x~ needs a MixedPolynomial")
        self.monomials = monos

    @classmethod
    def _make(cls, algebra, monomials):
        monos = tuple(monomials)
        kind = MixedPolynomial if any(m.mixed for m in monos) else Polynomial
        return kind(algebra, monos)

    @classmethod
    def var(cls, algebra: AlgebraSpec) -> Polynomial:
        return Polynomial(algebra, [Monomial((algebra.one, algebra.one))])

    @classmethod
    def const(cls, a: Element) -> Polynomial:
        return Polynomial(a.algebra, [Monomial((a,))])

    @classmethod
    def from_coeffs(cls, *coeff_lists: Sequence[Element]) -> Polynomial:
        monos = [Monomial(tuple(c)) for c in coeff_lists]
        return Polynomial(monos[0].algebra, monos)

    @property
    def degree(self) -> int:
        """Syntactic degree; ``to_tensor(p).degree`` is the canonical one."""
        return max((m.degree for m in self.monomials), default=-1)

    @property
    def mixed(self) -> bool:
        return any(m.mixed for m in self.monomials)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")
            return other
        if isinstance(other, Element):
            return Polynomial.const(other)
        return Polynomial.const(self.algebra.scalar_element(other))

    def __add__(self, other):
        other = self._coerce(other)
        return self._make(self.algebra, self.monomials + other.monomials)

    __radd__ = __add__

    def __neg__(self):
        return self._make(self.algebra, (m.scale(-1) for m in self.monomials))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return self._make(
            self.algebra, (m * n for m in self.monomials for n in other.monomials)
        )

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __call__(self, v: Element) -> Element:
        return poly_eval(self, v)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return tensor_eq(self, other)

    __hash__ = None

    def __str__(self):
        if not self.monomials:
            return "0"
        return " + ".join(str(m) for m in self.monomials)

    def __repr__(self):
        return f"{type(self).__name__}({self.algebra.name}: {self})"


class MixedPolynomial(Polynomial):
    """Polynomial in ``x`` and the conjugated variable ``x~``."""

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return tensor_eq(self, other)

    __hash__ = None


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p, v: Element) -> Element:
    """Evaluate a polynomial, mixed polynomial, monomial or tree at ``v``."""
    if isinstance(p, (Leaf, Var, Prod)):
        return tree_eval(p, v)
    if isinstance(p, Monomial):
        return p.eval(v)
    v = align_point(p.algebra, v)
    out = p.algebra.zero
    for m in p.monomials:
        out = out + m.eval(v)
    return out


def align_point(algebra: AlgebraSpec, v: Element) -> Element:
    """Bring ``v`` into ``algebra``, lifting to fraction-field scalars if needed."""
    if v.algebra is algebra or v.algebra == algebra:
        return v
    lifted = lift_algebra(v.algebra)
    if lifted.target == algebra:
        return Element(algebra, lifted.element(v).coords)
    raise AlgebraMismatch(f"{algebra.name}/{algebra.scalar} polynomial at "
                          f"{v.algebra.name}/{v.algebra.scalar} point")


# canonical tensor form ----------------------------------------------------

class DegreeTensor:
    """Sparse coordinates ``T[(i_0, ..., i_k)]`` of all degree components."""

    def __init__(self, algebra: AlgebraSpec, entries: dict):
        self.algebra = algebra
        self.entries = {k: v for k, v in entries.items() if v != 0}

    @property
    def degree(self) -> int:
        return max((len(k) - 1 for k in self.entries), default=-1)

    def component(self, k: int) -> dict:
        return {idx: v for idx, v in self.entries.items() if len(idx) == k + 1}

    def __eq__(self, other):
        if not isinstance(other, DegreeTensor):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"DegreeTensor(degree={self.degree}, nnz={len(self.entries)})"


def _expand(ring, coeffs, acc: dict, key_extra=None):
    supports = [[(i, c) for i, c in enumerate(a.coords) if c != 0] for a in coeffs]
    red = ring.reduce
    for combo in itertools.product(*supports):
        idx = tuple(i for i, _ in combo)
        if key_extra is not None:
            idx = (key_extra, idx)
        val = 1
        for _, c in combo:
            val = val * c
        acc[idx] = red(acc.get(idx, 0) + val)


def monomial_tensor(m: Monomial) -> dict:
    acc: dict = {}
    _expand(m.algebra.scalar, m.coeffs, acc)
    return {k: v for k, v in acc.items() if v != 0}


def to_tensor(p: Polynomial) -> DegreeTensor:
    _require_assoc(p.algebra)
    if p.mixed:
        raise ValueError("mixed polynomial has no single-variable tensor; substitute x~ first")
    acc: dict = {}
    for m in p.monomials:
        _expand(p.algebra.scalar, m.coeffs, acc)
    return DegreeTensor(p.algebra, acc)


def monomial_form(m: Monomial) -> dict:
    """Coordinates of the multilinear map ``(y_1..y_k) -> a_0 y_1 a_1 ... y_k a_k``.

    Keys are ``(marks, (j_1..j_k), out)`` for basis inputs ``y_s = e_{j_s}``;
    ``x`` and ``x~`` slots count as distinct variables.
    """
    alg = m.algebra
    basis = [alg.basis(i) for i in range(alg.dim)]
    layer = {(): m.coeffs[0]}
    for a in m.coeffs[1:]:
        layer = {
            js + (j,): val * basis[j] * a
            for js, val in layer.items() if not val.is_zero()
            for j in range(alg.dim)
        }
    out = {}
    for js, val in layer.items():
        for k, c in enumerate(val.coords):
            if c != 0:
                out[(m.marks, js, k)] = c
    return out


def _basis_layer(alg: AlgebraSpec, idx: tuple) -> dict:
    """``{(j_1..j_k): e_i0 e_j1 e_i1 ... e_jk e_ik}`` for a basis tuple, cached on ``alg``."""
    cache = alg.__dict__.setdefault("_basis_layers", {})
    hit = cache.get(idx)
    if hit is not None:
        return hit
    if len(idx) == 1:
        layer = {(): alg.basis(idx[0])}
    else:
        prev = _basis_layer(alg, idx[:-1])
        basis = [alg.basis(i) for i in range(alg.dim)]
        last = basis[idx[-1]]
        layer = {}
        for js, val in prev.items():
            for j in range(alg.dim):
                w = val * basis[j] * last
                if not w.is_zero():
                    layer[js + (j,)] = w
    cache[idx] = layer
    return layer


def canonical_form(p: Polynomial) -> dict:
    """Sparse multilinear-map coordinates; the equality used for polynomials.

    This is the image of :func:`to_tensor` under the map sending a tensor
    ``a_0 (x) ... (x) a_k`` to the k-linear map it induces, so tensors that only
    differ by relations holding in the ambient (e.g. commutativity) coincide.
    Keys are ``(marks, (j_1..j_k), out)``.
    """
    alg = p.algebra
    ring = alg.scalar
    raw: dict = {}
    for m in p.monomials:
        _expand(ring, m.coeffs, raw, key_extra=m.marks)
    acc: dict = {}
    for (marks, idx), c in raw.items():
        if c == 0:
            continue
        for js, w in _basis_layer(alg, idx).items():
            for k, v in enumerate(w.coords):
                if v != 0:
                    key = (marks, js, k)
                    acc[key] = acc.get(key, 0) + c * v
    return {k: r for k, r in ((k, ring.reduce(v)) for k, v in acc.items()) if r != 0}


def tensor_eq(p: Polynomial, q: Polynomial) -> bool:
    """Polynomial equality: equal canonical (multilinear) forms."""
    if p.algebra is not q.algebra and p.algebra != q.algebra:
        raise AlgebraMismatch(f"{p.algebra.name}/{p.algebra.scalar} vs {q.algebra.name}/{q.algebra.scalar}")
    _require_assoc(p.algebra)
    return canonical_form(p) == canonical_form(q)


def canonical_degree(p: Polynomial) -> int:
    return max((len(js) for _, js, _ in canonical_form(p)), default=-1)


def from_tensor(t: DegreeTensor) -> Polynomial:
    """One basis monomial ``c e_{i0} x e_{i1} ... x e_{ik}`` per nonzero entry."""
    alg = t.algebra
    monos = []
    for idx in sorted(t.entries, key=lambda k: (len(k), k)):
        coeffs = [alg.basis(i) for i in idx]
        coeffs[0] = coeffs[0].scale(t.entries[idx])
        monos.append(Monomial(tuple(coeffs)))
    return Polynomial(alg, monos)


def tensor_eval(t: DegreeTensor, v: Element) -> Element:
    """Contract the tensor against ``v``: sum of ``T[i] e_i0 v e_i1 ... v e_ik``.

    Works degree by degree with the partial products ``e_i0 v e_i1 ... v``
    shared across entries with a common prefix.
    """
    alg = t.algebra
    basis = [alg.basis(i) for i in range(alg.dim)]
    prefix_cache: dict = {(): None}

    def prefix(idx):
        # value of e_i0 v e_i1 v ... e_i(m-1) v for idx = (i0..i(m-1))
        if idx in prefix_cache:
            return prefix_cache[idx]
        head = prefix(idx[:-1])
        val = (basis[idx[-1]] if head is None else head * basis[idx[-1]]) * v
        prefix_cache[idx] = val
        return val

    out = alg.zero
    for idx, c in t.entries.items():
        head = prefix(idx[:-1])
        term = basis[idx[-1]] if head is None else head * basis[idx[-1]]
        out = out + term.scale(c)
    return out


# conjugation ----------------------------------------------------------------

def poly_conj(p: Polynomial) -> MixedPolynomial:
    """``(a_0 x a_1 ... x a_k)* = a_k* x~ ... x~ a_0*`` termwise."""
    _require_assoc(p.algebra)
    monos = [
        Monomial(tuple(a.conj() for a in reversed(m.coeffs)),
                 tuple(not mk for mk in reversed(m.marks)))
        for m in p.monomials
    ]
    return MixedPolynomial(p.algebra, monos)


@dataclass(frozen=True)
class ConjRepresentation:
    """``x* = sum_t u_t x v_t`` over the lifted algebra."""

    terms: tuple  # ((u, v), ...)

    @property
    def algebra(self) -> AlgebraSpec:
        return self.terms[0][0].algebra

    def apply(self, x: Element) -> Element:
        out = self.algebra.zero
        for u, v in self.terms:
            out = out + (u * x) * v
        return out

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.algebra, [Monomial((u, v)) for u, v in self.terms])

    def render(self) -> str:
        """Expression text; grouped as ``(u*x)*v`` when the algebra is nonassociative."""
        if self.algebra.assoc:
            return str(self.as_polynomial())
        return " + ".join(f"(({u})*x)*({v})" for u, v in self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def conj_as_polynomial(spec: AlgebraSpec) -> ConjRepresentation:
    """Solve ``sum_{p,q} lam[p,q] e_p e_i e_q = e_i*`` for all basis ``e_i``.

    Raises NotRepresentable when the system is inconsistent.
    """
    alg = lift_algebra(spec).target
    n = alg.dim
    e = [alg.basis(i) for i in range(n)]
    solver = SpanSolver(alg.scalar)
    for p in range(n):
        for q in range(n):
            col = {}
            for i in range(n):
                for k, c in enumerate(((e[p] * e[i]) * e[q]).coords):
                    if c != 0:
                        col[(i, k)] = c
            solver.add((p, q), col)
    target = {}
    for i in range(n):
        for k, c in enumerate(e[i].conj().coords):
            if c != 0:
                target[(i, k)] = c
    sol = solver.solve(target)
    if sol is None:
        raise NotRepresentable(
            f"conjugation of {spec.name} is not of the form sum u x v "
            f"(rank {solver.rank} of {n * n} unknowns)"
        )
    terms = tuple((e[p].scale(c), e[q]) for (p, q), c in sorted(sol.items()))
    rep = ConjRepresentation(terms)
    for i in range(n):
        assert rep.apply(e[i]) == e[i].conj()
    return rep


def lift_polynomial(p: Polynomial) -> Polynomial:
    lifted = lift_algebra(p.algebra)
    return Polynomial._make(
        lifted.target,
        (Monomial(tuple(lifted.element(a) for a in m.coeffs), m.marks) for m in p.monomials),
    )


def substitute_conj(p: Polynomial, rep: ConjRepresentation) -> Polynomial:
    """Replace every ``x~`` by ``sum_t u_t x v_t``; result lives over the lifted algebra."""
    p = lift_polynomial(p)
    alg = p.algebra
    if rep.algebra is not alg and rep.algebra != alg:
        raise AlgebraMismatch(f"representation for {rep.algebra.name} used in {alg.name}")
    monos = []
    for m in p.monomials:
        choices = [rep.terms if mk else (None,) for mk in m.marks]
        for pick in itertools.product(*choices):
            coeffs = list(m.coeffs)
            for s, t in enumerate(pick):
                if t is not None:
                    u, v = t
                    coeffs[s] = coeffs[s] * u
                    coeffs[s + 1] = v * coeffs[s + 1]
            monos.append(Monomial(tuple(coeffs)))
    return Polynomial(alg, monos)


# norms and roots ------------------------------------------------------------

def mono_norm_poly(m: Monomial) -> tuple[Scalar, int]:
    """``m(x) m(x)* = c (x x*)^k`` with ``c`` the product of coefficient norms."""
    _require_assoc(m.algebra)
    if m.mixed:
        raise ValueError("norm polynomial is defined for x-monomials")
    ring = m.algebra.scalar
    c = ring.one()
    for a in m.coeffs:
        c = ring.reduce(c * norm_form(a).value)
    return Scalar(ring, c), m.degree


def root_test(p: Polynomial, a: Element) -> bool:
    """``a`` is a root of ``p`` when ``p(a)`` is zero or a zero divisor."""
    return classify(poly_eval(p, a)).in_zero_set
