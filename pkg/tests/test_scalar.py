from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conjal.errors import BadScalar, NotEntire, RingMismatch
from conjal.scalar import ModN, QQ, ZZ, Scalar, ScalarRing, fraction_field, scalar_arith

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def test_add_rationals():
    assert scalar_arith("add", QQ("1/2"), QQ("1/3")) == QQ("5/6")


def test_mul_wraps_mod_6():
    assert scalar_arith("mul", ModN(6)(2), ModN(6)(3)) == ModN(6)(0)


def test_neg_zero():
    for ring in (ZZ, QQ, ModN(5)):
        assert scalar_arith("neg", ring(0)).is_zero()


def test_eq_and_is_zero_ops():
    assert scalar_arith("eq", ZZ(4), ZZ(4))
    assert not scalar_arith("eq", ZZ(4), ZZ(5))
    assert scalar_arith("is_zero", ModN(7)(14))


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatch):
        scalar_arith("add", ZZ(1), QQ(1))


@pytest.mark.parametrize("ring, expected", [(ZZ, QQ), (QQ, QQ), (ModN(7), ModN(7))])
def test_fraction_field(ring, expected):
    assert fraction_field(ring) == expected


def test_fraction_field_of_composite_modulus():
    with pytest.raises(NotEntire):
        fraction_field(ModN(6))


@pytest.mark.parametrize("n, entire", [(1, False), (2, True), (3, True), (4, False), (9, False), (13, True)])
def test_entire_iff_prime(n, entire):
    assert ModN(n).entire is entire


@pytest.mark.parametrize("name", ["Z", "Q", "Z/2", "Z/12"])
def test_ring_names_round_trip(name):
    assert ScalarRing.from_name(name).name == name


@pytest.mark.parametrize("name", ["R", "Z/0", "Z/x", ""])
def test_bad_ring_names(name):
    with pytest.raises(BadScalar):
        ScalarRing.from_name(name)


@pytest.mark.parametrize("ring, text", [(ZZ, "1/2"), (QQ, "1/0"), (QQ, "1.5"), (ModN(4), "1/2")])
def test_bad_literals(ring, text):
    with pytest.raises(BadScalar):
        ring.parse(text)


def test_fraction_literal_mod_p():
    assert ModN(7)("1/2") == ModN(7)(4)


def test_integer_units():
    assert ZZ.inv(-1) == -1
    with pytest.raises(ZeroDivisionError):
        ZZ.inv(2)


@given(rationals, rationals, rationals)
def test_rational_ring_axioms(a, b, c):
    x, y, z = QQ(a), QQ(b), QQ(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == QQ(0)
    if not x.is_zero():
        assert x * x.inverse() == QQ(1)


@given(st.integers(2, 40), st.integers(-200, 200), st.integers(-200, 200))
def test_mod_n_agrees_with_int_arithmetic(n, a, b):
    R = ModN(n)
    assert (R(a) * R(b)).value == (a * b) % n
    assert (R(a) - R(b)).value == (a - b) % n


@given(rationals)
def test_print_parse_round_trip(q):
    assert QQ.parse(QQ.fmt(QQ.coerce(q))) == q


def test_scalar_equality_with_ints():
    assert QQ(3) == 3
    assert ModN(5)(7) == 2
    assert Scalar(QQ, Fraction(1, 2)) != 1
