from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from naryalg.scalars import GaussianRational, I, format_scalar, parse_scalar

rationals = st.fractions(max_denominator=50)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_basic_arithmetic():
    a = GaussianRational(Fraction(1, 2), Fraction(3, 4))
    b = GaussianRational(2, -1)
    assert a + b == GaussianRational(Fraction(5, 2), Fraction(-1, 4))
    assert a * I == GaussianRational(Fraction(-3, 4), Fraction(1, 2))
    assert I * I == -1
    assert (a / a) == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)


@given(gaussians, gaussians)
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(gaussians, gaussians, gaussians)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(gaussians)
def test_conjugate_norm(a):
    n = a * a.conjugate()
    assert n.im == 0 and n.re >= 0


@given(gaussians)
def test_division_roundtrip(a):
    if a:
        assert (a * GaussianRational(2, 3)) / a == GaussianRational(2, 3)


@given(gaussians)
def test_parse_format_roundtrip_gaussian(a):
    assert parse_scalar(format_scalar(a)) == a


@given(rationals)
def test_parse_format_roundtrip_rational(q):
    out = parse_scalar(format_scalar(q))
    assert isinstance(out, Fraction) and out == q


def test_parse_examples():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("-2") == Fraction(-2)
    assert parse_scalar("1/2+3/4i") == GaussianRational(Fraction(1, 2), Fraction(3, 4))
    assert parse_scalar("1/2-3/4i") == GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    assert parse_scalar("0+1i") == I
