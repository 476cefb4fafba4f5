from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pgwa.scalar import (Scalar, ScalarZeroDivisionError, cyclotomic_polynomial, euler_phi,
                         root_of_unity_order)
from strategies import nonzero_scalars, scalars

z = Scalar.root_of_unity


@pytest.mark.parametrize("n, expected", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomial(n, expected):
    assert cyclotomic_polynomial(n) == expected


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_degree_is_phi(n):
    assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_arithmetic_examples():
    assert z(4).inverse() == -z(4)
    assert z(4).inverse() == z(4, 3)
    assert Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6)
    assert (Scalar(1, 2) + Scalar(1, 3)).conductor == 1
    assert z(2) * z(2) == 1


def test_division_by_zero_is_distinct():
    with pytest.raises(ScalarZeroDivisionError):
        Scalar(0).inverse()
    with pytest.raises(ZeroDivisionError):
        z(3) / Scalar(0)


@pytest.mark.parametrize("s, order", [(z(4), 4), (Scalar(-1), 2), (Scalar(2), None), (Scalar(1), 1),
                                      (z(6, 2), 3), (-z(3), 6), (z(4) + 1, None), (Scalar(0), None)])
def test_root_of_unity_order(s, order):
    assert root_of_unity_order(s) == order


@pytest.mark.parametrize("n", range(1, 13))
def test_zeta_powers(n):
    assert z(n) ** n == 1
    assert all(z(n) ** j != 1 for j in range(1, n))


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclotomic_vanishes_at_zeta(n):
    phi = cyclotomic_polynomial(n)
    assert sum((z(n) ** i * c for i, c in enumerate(phi)), Scalar(0)) == 0


def test_mixed_conductor_promotion():
    s = z(4) + z(3)
    assert s.conductor == 12
    assert s - z(3) == z(4)
    # i = z12^3
    assert z(4) == z(12, 3)
    assert hash(z(4)) == hash(z(12, 3))
    assert z(6, 3) == -1


def test_display():
    assert str(Scalar(3, 2)) == "3/2"
    assert str(z(4)) == "z4"
    assert str(-z(4)) == "-z4"
    assert str(Scalar(0)) == "0"


@given(scalars(), scalars(), scalars())
def test_field_axioms(s, u, v):
    assert (s * u) * v == s * (u * v)
    assert (s + u) + v == s + (u + v)
    assert s * (u + v) == s * u + s * v
    assert s * u == u * s
    assert s - s == 0


@given(nonzero_scalars)
def test_inverse(s):
    assert s * s.inverse() == 1
    assert s / s == 1


@given(scalars(conductors=(1, 2, 3, 4, 6)), st.sampled_from([2, 3, 4, 5]))
def test_promote_demote_roundtrip(s, k):
    big = s.promote(s.conductor * k)
    assert big == s
    assert big.demote() == s
    assert big.demote().conductor <= s.conductor


@given(scalars())
def test_hash_consistent_with_eq(s):
    assert hash(s.promote(s.conductor * 2)) == hash(s)


@given(nonzero_scalars, st.integers(-4, 4), st.integers(-4, 4))
@settings(max_examples=50)
def test_power_laws(s, a, b):
    assert s ** a * s ** b == s ** (a + b)


def test_fraction_interop():
    assert Scalar(Fraction(3, 4)).to_fraction() == Fraction(3, 4)
    assert Scalar(2) * 3 == 6
    assert 1 - Scalar(1, 2) == Scalar(1, 2)
