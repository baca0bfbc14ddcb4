from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from innertwist.scalars import (CyclotomicField, FieldMismatchError, ScalarSyntaxError,
                                cyclotomic_polynomial, euler_phi, parse_scalar)

from conftest import FIELD_ORDERS, scalars


# --- oracle values


@pytest.mark.parametrize("n, poly", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomial_small_orders(n, poly):
    assert cyclotomic_polynomial(n) == poly


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_degree_is_euler_phi(n):
    assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_zeta3_times_zeta3_squared_is_one():
    F = CyclotomicField(3)
    assert F.zeta(1) * F.zeta(2) == 1


def test_inverse_of_one_plus_i():
    F = CyclotomicField(4)
    z = F.zeta()
    assert (1 + z).inverse() == (1 - z) / 2


@pytest.mark.parametrize("n", FIELD_ORDERS)
def test_zeta_has_exact_order(n):
    F = CyclotomicField(n)
    z = F.zeta()
    assert z ** n == 1
    assert all(z ** k != 1 for k in range(1, n))


def test_fields_are_shared_instances():
    assert CyclotomicField(5) is CyclotomicField(5)


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatchError):
        CyclotomicField(3).zeta() + CyclotomicField(4).zeta()


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CyclotomicField(6).zero.inverse()


@pytest.mark.parametrize("text, expected", [
    ("1/2", Fraction(1, 2)),
    ("-3", -3),
    ("2*(1/4)", Fraction(1, 2)),
])
def test_parse_rationals(text, expected):
    assert parse_scalar(text, CyclotomicField(3)) == expected


def test_parse_powers_of_zeta():
    F = CyclotomicField(3)
    assert parse_scalar("z^2", F) == F.zeta(2)
    assert parse_scalar("z^3", F) == 1
    assert parse_scalar("-1 - z", F) == F.zeta(2)
    assert parse_scalar("(1 + z)/(1 - z)", F) * (1 - F.zeta()) == 1 + F.zeta()


@pytest.mark.parametrize("text, column", [("1 +", 4), ("2 * * z", 5), ("1/0", 3), ("q", 1)])
def test_parse_errors_report_column(text, column):
    with pytest.raises(ScalarSyntaxError) as info:
        parse_scalar(text, CyclotomicField(4))
    assert info.value.column == column


def test_str_round_trips_through_the_parser():
    F = CyclotomicField(12)
    x = F.from_poly([Fraction(1, 3), -2, 0, Fraction(5, 7)])
    assert parse_scalar(str(x), F) == x


# --- field laws


@st.composite
def field_and_triple(draw, orders=FIELD_ORDERS):
    F = CyclotomicField(draw(st.sampled_from(orders)))
    return F, draw(scalars(F)), draw(scalars(F)), draw(scalars(F))


@settings(max_examples=150, deadline=None)
@given(field_and_triple())
def test_ring_laws(data):
    F, a, b, c = data
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + F.zero == a and a * F.one == a
    assert a - a == F.zero


@settings(max_examples=150, deadline=None)
@given(field_and_triple())
def test_inverses(data):
    F, a, _, _ = data
    if a.is_zero():
        return
    assert a * a.inverse() == 1
    assert a.inverse().inverse() == a


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELD_ORDERS), st.integers(-30, 30), st.integers(-30, 30))
def test_zeta_powers_add(n, j, k):
    F = CyclotomicField(n)
    assert F.zeta(j) * F.zeta(k) == F.zeta(j + k)
    assert F.zeta() ** j == F.zeta(j)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELD_ORDERS).flatmap(lambda n: scalars(CyclotomicField(n))))
def test_hash_respects_equality(a):
    b = a.field.from_poly(list(a.coeffs))
    assert a == b and hash(a) == hash(b)
