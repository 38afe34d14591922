import pytest
from hypothesis import given, strategies as st

from conjal import catalog, QQ, ZZ
from conjal.algebra import AlgebraSpec, norm_form
from conjal.errors import AlgebraMismatch, NonAssociative, NotRepresentable
from conjal.fractions import lift_element
from conjal.polynomial import (
    Leaf, MixedPolynomial, Monomial, Polynomial, Prod, Var, canonical_degree, conj_as_polynomial,
    flatten, from_tensor, mono_norm_poly, poly_add, poly_conj, poly_eval, poly_mul, root_test,
    substitute_conj, tensor_eq, tensor_eval, to_tensor, tree_eval,
)

from conftest import ASSOC_NAMES, elements
from oracles import as_fractions, quat_mul

small = st.integers(-2, 2)


def trees(alg, depth=3):
    leaves = st.one_of(st.just(Var()), elements(alg, small).map(Leaf))
    return st.recursive(leaves, lambda kids: st.builds(Prod, kids, kids), max_leaves=2 ** depth)


def monomials(alg, max_degree=3):
    return st.lists(elements(alg, small), min_size=1, max_size=max_degree + 1).map(
        lambda cs: Monomial(tuple(cs)))


def polys(alg, max_degree=3):
    return st.lists(monomials(alg, max_degree), min_size=1, max_size=3).map(
        lambda ms: Polynomial(alg, ms))


def basis(alg):
    return [alg.basis(t) for t in range(alg.dim)]


# worked examples --------------------------------------------------------------

def test_flatten_examples(H):
    a = H.basis(1) + 2
    assert flatten(Prod(Leaf(a), Prod(Var(), Var()))).coeffs == (a, H.one, H.one)
    assert flatten(Leaf(a)).coeffs == (a,)


def test_flatten_guards_nonassociative_ambient():
    O = catalog("octonion")
    with pytest.raises(NonAssociative):
        flatten(Prod(Leaf(O.basis(1)), Var()))
    with pytest.raises(NonAssociative):
        Polynomial.var(O)


def test_boundary_product(H):
    one, i, j, k = basis(H)
    a0, a1, b0 = i + 1, j, k + 2
    assert (Monomial((a0, a1)) * Monomial((b0,))).coeffs == (a0, a1 * b0)
    x = Polynomial.var(H)
    assert (x * x).monomials[0].coeffs == (one, one, one)
    assert as_fractions(quat_mul((0, 1, 0, 0), (0, 0, 1, 0))) == (0, 0, 0, 1)
    assert (Monomial((i,)) * Monomial((j, k))).coeffs == (k, k)
    assert poly_mul(Polynomial.const(i), Polynomial.from_coeffs([j, k])) == Polynomial.from_coeffs([k, k])


def test_eval_examples(H):
    one, i, j, k = basis(H)
    # oracle: i*k*j
    assert as_fractions(quat_mul(quat_mul((0, 1, 0, 0), (0, 0, 0, 1)), (0, 0, 1, 0))) == (1, 0, 0, 0)
    assert poly_eval(Polynomial.from_coeffs([i, j]), k) == one
    x = Polynomial.var(H)
    assert poly_eval(x * x, i) == -one
    c = i + 3 * j
    assert all(poly_eval(Polynomial.const(c), v) == c for v in basis(H))


def test_tensor_examples(H):
    one, i, j, k = basis(H)
    T = to_tensor(Polynomial.from_coeffs([i, j]))
    assert T.component(1) == {(1, 2): 1}
    p = poly_add(Polynomial.from_coeffs([i, j]), Polynomial.from_coeffs([j, i]))
    q = poly_add(Polynomial.from_coeffs([j, i]), Polynomial.from_coeffs([i, j]))
    assert tensor_eq(p, q)


def test_commutative_ambient_identifies_x_i_with_i_x():
    C = catalog("complex")
    one, i = basis(C)
    assert tensor_eq(Polynomial.from_coeffs([one, i]), Polynomial.from_coeffs([i, one]))
    H = catalog("quaternion")
    assert not tensor_eq(Polynomial.from_coeffs([H.one, H.basis(1)]),
                         Polynomial.from_coeffs([H.basis(1), H.one]))


def test_cancellation_drops_canonical_degree(H):
    x = Polynomial.var(H)
    p = x * x * H.basis(1) - x * x * H.basis(1) + x
    assert canonical_degree(p) == 1


def test_conj_examples(H):
    one, i, j, k = basis(H)
    a0, a1 = i + 2, j - k
    pc = poly_conj(Polynomial.from_coeffs([a0, a1]))
    assert isinstance(pc, MixedPolynomial)
    (m,) = pc.monomials
    assert m.coeffs == (a1.conj(), a0.conj()) and m.marks == (True,)
    assert poly_conj(Polynomial.const(i + 1)).monomials[0].coeffs == ((i + 1).conj(),)
    assert poly_eval(poly_conj(Polynomial.var(H)), i) == -i


def test_mixed_polynomial_prints_conjugated_variable(H):
    assert str(poly_conj(Polynomial.var(H))) == "~x"


def test_quaternion_conjugation_polynomial(H):
    one, i, j, k = basis(H)
    rep = conj_as_polynomial(H)
    for e in basis(H):
        assert rep.apply(e) == e.conj()
    x = Polynomial.var(H)
    expected = (x + i * x * i + j * x * j + k * x * k) * QQ("-1/2")
    assert tensor_eq(rep.as_polynomial(), expected)


def test_split_quaternion_conjugation_polynomial():
    S = catalog("split_quaternion")
    rep = conj_as_polynomial(S)
    assert all(rep.apply(e) == e.conj() for e in basis(S))


def test_octonion_conjugation_with_grouping():
    from conjal.expr import eval_at, parse_expr
    O = catalog("octonion", ZZ)
    rep = conj_as_polynomial(O)
    B = rep.algebra
    e = basis(B)
    assert rep.terms == tuple((p.scale("-1/6"), p) for p in e)
    ast = parse_expr(rep.render(), B)
    v = B.element([1, -2, 0, 3, 1, 0, -1, 2])
    assert rep.apply(v) == v.conj() == eval_at(ast, B, v)


@pytest.mark.parametrize("name", ["complex", "split_complex", "dual"])
def test_commutative_conjugation_not_representable(name):
    with pytest.raises(NotRepresentable):
        conj_as_polynomial(catalog(name))


def test_dim_one_identity_representation():
    R = AlgebraSpec("reals", 1, QQ, (((1,),),))
    rep = conj_as_polynomial(R)
    assert len(rep) == 1
    (u, v), = rep
    assert u == R.one and v == R.one


def test_substitute_conj_examples(H):
    one, i, j, k = basis(H)
    rep = conj_as_polynomial(H)
    x = Polynomial.var(H)
    xs = poly_conj(x)
    expected = (x + i * x * i + j * x * j + k * x * k) * QQ("-1/2")
    assert tensor_eq(substitute_conj(xs, rep), expected)
    p = x * i * x + j
    assert tensor_eq(substitute_conj(p, rep), p)
    pp = substitute_conj(x * xs, rep)
    assert tensor_eq(pp, x * expected)
    for v in basis(H) + [one + 2 * i - k]:
        assert poly_eval(pp, v) == v * v.conj()


def test_substitute_conj_over_integers_lands_in_rationals(HZ):
    rep = conj_as_polynomial(HZ)
    p = substitute_conj(poly_conj(Polynomial.var(HZ)), rep)
    assert p.algebra.scalar == QQ
    assert poly_eval(p, HZ.basis(2) + 1) == lift_element(HZ.basis(2) + 1).conj()


def test_mono_norm_examples(H):
    one, i, j, k = basis(H)
    assert mono_norm_poly(Monomial((i, j))) == (QQ(1), 1)
    assert mono_norm_poly(Monomial((2 * one, one))) == (QQ(4), 1)
    c0 = one + i + j
    assert mono_norm_poly(Monomial((c0,))) == (norm_form(c0), 0)


def test_root_examples(H):
    one, i, j, k = basis(H)
    x = Polynomial.var(H)
    assert root_test(x - i, i)
    SC = catalog("split_complex")
    assert root_test(Polynomial.var(SC) * (SC.one + SC.basis(1)), SC.one)
    assert not root_test(x, one + j)


def test_polynomial_over_other_algebra_rejected(H, SC):
    with pytest.raises(AlgebraMismatch):
        Polynomial.var(H) + Polynomial.var(SC)


# properties ------------------------------------------------------------------

algebra_names = st.sampled_from(ASSOC_NAMES)


@given(st.data())
def test_flatten_preserves_values(data):
    A = catalog(data.draw(algebra_names), ZZ)
    t = data.draw(trees(A))
    v = data.draw(elements(A, small))
    assert tree_eval(t, v) == poly_eval(flatten(t, A), v)


@given(st.data())
def test_tensor_round_trip(data):
    A = catalog(data.draw(algebra_names), ZZ)
    p = data.draw(polys(A))
    v = data.draw(elements(A, small))
    T = to_tensor(p)
    assert tensor_eq(from_tensor(T), p)
    assert tensor_eval(T, v) == poly_eval(p, v)


@given(st.data())
def test_tensor_eq_iff_same_values(data):
    A = catalog(data.draw(algebra_names), ZZ)
    p, q = data.draw(polys(A)), data.draw(polys(A))
    if tensor_eq(p, q):
        for v in basis(A):
            assert poly_eval(p, v) == poly_eval(q, v)
    assert tensor_eq(p + q, q + p)
    assert tensor_eq(p - p, Polynomial(A))


@given(st.data())
def test_ring_laws(data):
    A = catalog(data.draw(algebra_names), ZZ)
    # canonical forms grow like dim^(degree+1), so keep products at degree <= 3
    p, q, r = (data.draw(polys(A, 1)) for _ in range(3))
    assert tensor_eq((p * q) * r, p * (q * r))
    assert tensor_eq(p * (q + r), p * q + p * r)


@given(st.data())
def test_eval_is_a_homomorphism(data):
    A = catalog(data.draw(algebra_names), ZZ)
    p, q = data.draw(polys(A)), data.draw(polys(A))
    v = data.draw(elements(A, small))
    assert poly_eval(p * q, v) == poly_eval(p, v) * poly_eval(q, v)
    assert poly_eval(p + q, v) == poly_eval(p, v) + poly_eval(q, v)


@given(st.data())
def test_conj_is_an_anti_homomorphism(data):
    A = catalog(data.draw(algebra_names), ZZ)
    p, q = data.draw(polys(A)), data.draw(polys(A))
    v = data.draw(elements(A, small))
    assert poly_eval(poly_conj(p * q), v) == poly_eval(poly_conj(q), v) * poly_eval(poly_conj(p), v)
    assert poly_eval(poly_conj(p), v) == poly_eval(p, v).conj()


@given(st.data())
def test_norm_polynomial(data):
    A = catalog(data.draw(algebra_names), ZZ)
    m = data.draw(monomials(A))
    v = data.draw(elements(A, small))
    c, k = mono_norm_poly(m)
    w = m.eval(v)
    assert w * w.conj() == A.scalar_element(c.value * norm_form(v).value ** k)


@given(st.data())
def test_substitute_conj_pointwise(data):
    A = catalog(data.draw(st.sampled_from(["quaternion", "split_quaternion"])), ZZ)
    rep = conj_as_polynomial(A)
    p, q = data.draw(polys(A)), data.draw(polys(A))
    mixed = p * poly_conj(q) + poly_conj(p)
    v = data.draw(elements(A, small))
    assert poly_eval(substitute_conj(mixed, rep), v) == lift_element(poly_eval(mixed, v))
