import pytest
from hypothesis import given, strategies as st

from conjal import catalog
from conjal.errors import ExprSyntaxError, RootOfDenominator, UnknownBasisName
from conjal.expr import (
    Add, Basis, Conj, ConjVar, Inv, Mul, Neg, Num, Paren, Sub, Var, eval_at, eval_element,
    parse_expr, parse_syntax, render, to_polynomial, to_tree,
)
from conjal.polynomial import flatten, poly_eval, tensor_eq, tree_eval
from conjal.suite import CORPUS


def test_precedence(H):
    assert parse_expr("i*j + 2", H) == Add(Mul(Basis("i"), Basis("j")), Num("2"))
    assert parse_expr("~(1+i)", H) == Conj(Paren(Add(Num("1"), Basis("i"))))
    assert parse_expr("~i*j", H) == Mul(Conj(Basis("i")), Basis("j"))
    assert parse_expr("1 - i - j", H) == Sub(Sub(Num("1"), Basis("i")), Basis("j"))
    assert parse_expr("i*j*k", H) == Mul(Mul(Basis("i"), Basis("j")), Basis("k"))


def test_variables_and_extensions(H):
    assert parse_expr("~x", H) == ConjVar()
    assert parse_expr("~(x)", H) == Conj(Paren(Var()))
    assert parse_expr("-x", H) == Neg(Var())
    assert parse_expr("2i", H) == Mul(Num("2"), Basis("i"))
    assert parse_expr("inv(x)", H) == Inv(Var())


@pytest.mark.parametrize("src, offset", [("q*", 2), ("(1+i", 4), ("1 +", 3), ("i j", 2), ("1 # 2", 2),
                                          ("inv x", 4), ("", 0)])
def test_syntax_errors_carry_offsets(src, offset):
    with pytest.raises(ExprSyntaxError) as info:
        parse_syntax(src)
    assert info.value.offset == offset


def test_offsets_count_bytes():
    with pytest.raises(ExprSyntaxError) as info:
        parse_syntax("1 + é")
    assert info.value.offset == 4


def test_unknown_basis_name(H):
    with pytest.raises(UnknownBasisName) as info:
        parse_expr("1 + q", H)
    assert info.value.offset == 4
    assert parse_expr("e1 + e7", catalog("octonion"))


def test_eval(H):
    assert eval_element(parse_expr("i*j", H), H) == H.basis(3)
    assert eval_element(parse_expr("~(1+i)", H), H) == H.one - H.basis(1)
    assert eval_element(parse_expr("inv(2)*i", H), H) == H.basis(1).scale("1/2")
    with pytest.raises(ExprSyntaxError):
        eval_element(parse_expr("x", H), H)


def test_eval_respects_nonassociative_grouping():
    O = catalog("octonion")
    left = eval_element(parse_expr("(e1*e2)*e4", O), O)
    right = eval_element(parse_expr("e1*(e2*e4)", O), O)
    assert left == -right != O.zero
    assert eval_at(parse_expr("x*(e2*e4)", O), O, O.basis(1)) == right


def test_eval_at_root(H):
    with pytest.raises(RootOfDenominator):
        eval_at(parse_expr("inv(x - i)", H), H, H.basis(1))


def test_to_tree_and_polynomial_agree(H):
    ast = parse_expr("(i*x)*(x*j)", H)
    t = to_tree(ast, H)
    p = to_polynomial(ast, H)
    from conjal.polynomial import Polynomial
    assert tensor_eq(p, Polynomial(H, [flatten(t)]))
    assert tensor_eq(p, to_polynomial(parse_expr("i*x*x*j", H), H))
    for v in (H.basis(1), H.one + H.basis(2)):
        assert tree_eval(t, v) == poly_eval(p, v)


def test_mixed_polynomial_from_text(H):
    p = to_polynomial(parse_expr("x*~x", H), H)
    v = H.one + 2 * H.basis(1)
    assert poly_eval(p, v) == v * v.conj()


# round trip --------------------------------------------------------------------

atoms = st.sampled_from(["x", "~x", "1", "2", "3/5", "i", "j", "k", "2i"])


def sources():
    def extend(inner):
        return st.one_of(
            st.tuples(inner, st.sampled_from([" + ", " - ", "*"]), inner).map("".join),
            inner.map(lambda s: f"({s})"),
            inner.map(lambda s: f"~({s})"),
            inner.map(lambda s: f"-{s}"),
            inner.map(lambda s: f"inv({s})"),
        )
    return st.recursive(atoms, extend, max_leaves=12)


@given(sources())
def test_print_parse_round_trip(src):
    H = catalog("quaternion")
    ast = parse_expr(src, H)
    printed = render(ast)
    assert parse_expr(printed, H) == ast
    assert render(parse_expr(printed, H)) == printed


def test_fixed_corpus_round_trip(H):
    assert len(CORPUS) >= 30
    for src in CORPUS:
        ast = parse_expr(src, H)
        assert parse_expr(render(ast), H) == ast
