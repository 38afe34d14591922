"""Expression grammar shared by the CLI and the tests.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | '~' factor | 'inv' '(' expr ')' | '(' expr ')'
            | 'x' | scalar | basisname

Scalars are ``[0-9]+`` or ``[0-9]+/[0-9]+``; a scalar written directly in
front of a name (``2i``) is read as ``2*i``.  ``~x`` is the conjugated
variable.  Parsing is two-phase: syntax first, then basis names are checked
against the ambient algebra, so ``q*`` is a syntax error even where ``q`` is
unknown.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .algebra import AlgebraSpec, Element
from .errors import ExprSyntaxError, RootOfDenominator, UnknownBasisName, NotInvertible
from .fractions import invert, lift_algebra
from .polynomial import Leaf, Polynomial, Prod, Var as TreeVar, poly_conj, MonomialTree
from .rational import Const, InvPoly, RProd, RVar, Sum, inv_poly


@dataclass(frozen=True)
class Num:
    text: str
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Basis:
    name: str
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ConjVar:
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    child: "ExprAst"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Conj:
    child: "ExprAst"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Inv:
    child: "ExprAst"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Paren:
    child: "ExprAst"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Sub:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Mul:
    left: "ExprAst"
    right: "ExprAst"


ExprAst = Union[Num, Basis, Var, ConjVar, Neg, Conj, Inv, Paren, Add, Sub, Mul]

_TOKEN = re.compile(r"\s*(?:(?P<num>[0-9]+(?:/[0-9]+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*~()]))")


def _tokenize(src: str):
    toks = []
    pos = 0
    src_len = len(src)
    while True:
        while pos < src_len and src[pos].isspace():
            pos += 1
        if pos >= src_len:
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise ExprSyntaxError(_byte_offset(src, pos), "a token", src[pos])
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), _byte_offset(src, start)))
        pos = m.end()
    toks.append(("end", "", _byte_offset(src, src_len)))
    return toks


def _byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, text, off = self.take()
        if kind != "op" or text != op:
            raise ExprSyntaxError(off, repr(op), text or "end of input")

    def expr(self):
        node = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                right = self.term()
                node = Add(node, right) if text == "+" else Sub(node, right)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.take()
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self):
        kind, text, off = self.take()
        if kind == "op":
            if text == "-":
                return Neg(self.factor(), off)
            if text == "~":
                nk, nt, _ = self.peek()
                if nk == "name" and nt == "x":
                    self.take()
                    return ConjVar(off)
                return Conj(self.factor(), off)
            if text == "(":
                inner = self.expr()
                self.expect_op(")")
                return Paren(inner, off)
        if kind == "num":
            nxt = self.peek()
            if nxt[0] == "name" and nxt[2] == off + len(text.encode()) and nxt[1] not in ("x", "inv"):
                # "2i" juxtaposition
                self.take()
                return Mul(Num(text, off), Basis(nxt[1], nxt[2]))
            return Num(text, off)
        if kind == "name":
            if text == "x":
                return Var(off)
            if text == "inv":
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return Inv(inner, off)
            return Basis(text, off)
        raise ExprSyntaxError(off, "a factor", text or "end of input")


def parse_syntax(src: str) -> ExprAst:
    p = _Parser(src)
    node = p.expr()
    kind, text, off = p.peek()
    if kind != "end":
        raise ExprSyntaxError(off, "an operator or end of input", text)
    return node


def _walk(node):
    yield node
    for attr in ("child", "left", "right"):
        sub = getattr(node, attr, None)
        if sub is not None:
            yield from _walk(sub)


def parse_expr(src: str, ambient: AlgebraSpec) -> ExprAst:
    """Parse and check basis names against ``ambient``."""
    node = parse_syntax(src)
    names = set(ambient.basis_names)
    for n in _walk(node):
        if isinstance(n, Basis) and n.name not in names:
            raise UnknownBasisName(n.name, n.offset)
    return node


def render(node: ExprAst) -> str:
    if isinstance(node, Num):
        return node.text
    if isinstance(node, Basis):
        return node.name
    if isinstance(node, Var):
        return "x"
    if isinstance(node, ConjVar):
        return "~x"
    if isinstance(node, Neg):
        return "-" + render(node.child)
    if isinstance(node, Conj):
        return "~" + render(node.child)
    if isinstance(node, Inv):
        return f"inv({render(node.child)})"
    if isinstance(node, Paren):
        return f"({render(node.child)})"
    if isinstance(node, Add):
        return f"{render(node.left)} + {render(node.right)}"
    if isinstance(node, Sub):
        return f"{render(node.left)} - {render(node.right)}"
    if isinstance(node, Mul):
        if isinstance(node.left, Num) and isinstance(node.right, Basis):
            # juxtaposed, so the pair stays one factor when it is a right operand
            return f"{node.left.text}{node.right.name}"
        return f"{render(node.left)}*{render(node.right)}"
    raise TypeError(node)


def has_variable(node: ExprAst) -> bool:
    return any(isinstance(n, (Var, ConjVar)) for n in _walk(node))


def has_inverse(node: ExprAst) -> bool:
    return any(isinstance(n, Inv) for n in _walk(node))


def _first_offset(node) -> int:
    for n in _walk(node):
        off = getattr(n, "offset", None)
        if off is not None:
            return off
    return 0


# evaluation ---------------------------------------------------------------

def _leaf(node, alg: AlgebraSpec) -> Element:
    if isinstance(node, Num):
        return alg.scalar_element(alg.scalar.parse(node.text))
    return alg.basis(alg.basis_index(node.name))


def eval_element(node: ExprAst, alg: AlgebraSpec) -> Element:
    """Value of a variable-free expression; ``inv`` moves to the lifted algebra."""
    if has_variable(node):
        raise ExprSyntaxError(_first_offset(node), "an expression without x")
    if has_inverse(node):
        alg = lift_algebra(alg).target
    return eval_at(node, alg, None)


def eval_at(node: ExprAst, alg: AlgebraSpec, v: Element | None) -> Element:
    """Evaluate with ``x := v`` following the tree's own parenthesization."""
    def go(n):
        if isinstance(n, (Num, Basis)):
            return _leaf(n, alg)
        if isinstance(n, Var):
            return v
        if isinstance(n, ConjVar):
            return v.conj()
        if isinstance(n, Neg):
            return -go(n.child)
        if isinstance(n, Conj):
            return go(n.child).conj()
        if isinstance(n, Paren):
            return go(n.child)
        if isinstance(n, Inv):
            w = go(n.child)
            try:
                return invert(w)
            except NotInvertible:
                if v is None:
                    raise
                raise RootOfDenominator(f"{v} is a root of {render(n.child)}", n.child, v) from None
        if isinstance(n, Add):
            return go(n.left) + go(n.right)
        if isinstance(n, Sub):
            return go(n.left) - go(n.right)
        if isinstance(n, Mul):
            return go(n.left) * go(n.right)
        raise TypeError(n)

    if v is not None:
        if has_inverse(node):
            alg = lift_algebra(alg).target
        v = lift_algebra(v.algebra).element(v) if v.algebra != alg else v
    return go(node)


def to_polynomial(node: ExprAst, alg: AlgebraSpec) -> Polynomial:
    def go(n):
        if isinstance(n, (Num, Basis)):
            return Polynomial.const(_leaf(n, alg))
        if isinstance(n, Var):
            return Polynomial.var(alg)
        if isinstance(n, ConjVar):
            return poly_conj(Polynomial.var(alg))
        if isinstance(n, Neg):
            return -go(n.child)
        if isinstance(n, Conj):
            return poly_conj(go(n.child))
        if isinstance(n, Paren):
            return go(n.child)
        if isinstance(n, Inv):
            raise ExprSyntaxError(n.offset, "a polynomial (inv is only allowed in reval)", "inv")
        if isinstance(n, Add):
            return go(n.left) + go(n.right)
        if isinstance(n, Sub):
            return go(n.left) - go(n.right)
        if isinstance(n, Mul):
            return go(n.left) * go(n.right)
        raise TypeError(n)

    return go(node)


def to_rational(node: ExprAst, alg: AlgebraSpec):
    def go(n):
        if isinstance(n, (Num, Basis)):
            return Const(_leaf(n, alg))
        if isinstance(n, Var):
            return RVar()
        if isinstance(n, ConjVar):
            raise ExprSyntaxError(n.offset, "x (conjugated variable is not a rational mapping)", "~x")
        if isinstance(n, Neg):
            return RProd(Const(alg.scalar_element(-1)), go(n.child))
        if isinstance(n, Conj):
            raise ExprSyntaxError(n.offset, "no conjugation in a rational expression", "~")
        if isinstance(n, Paren):
            return go(n.child)
        if isinstance(n, Inv):
            return inv_poly(to_polynomial(n.child, alg))
        if isinstance(n, Add):
            return Sum(go(n.left), go(n.right))
        if isinstance(n, Sub):
            return Sum(go(n.left), RProd(Const(alg.scalar_element(-1)), go(n.right)))
        if isinstance(n, Mul):
            return RProd(go(n.left), go(n.right))
        raise TypeError(n)

    return go(node)


def to_tree(node: ExprAst, alg: AlgebraSpec) -> MonomialTree:
    """Monomial tree of a pure product expression (constants, x, parentheses)."""
    if isinstance(node, Paren):
        return to_tree(node.child, alg)
    if isinstance(node, Var):
        return TreeVar()
    if isinstance(node, (Num, Basis)):
        return Leaf(_leaf(node, alg))
    if isinstance(node, Mul):
        return Prod(to_tree(node.left, alg), to_tree(node.right, alg))
    raise ExprSyntaxError(_first_offset(node), "a product of constants and x")
