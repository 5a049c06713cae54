import cmath

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from dialgebra import scalars
from dialgebra.scalars import (COMPLEX, EPS, RATIONAL, format_scalar,
                               parse_scalar)

rationals = st.fractions(max_denominator=10 ** 6).map(
    lambda f: mpq(f.numerator, f.denominator))


@given(rationals)
def test_rational_roundtrip(q):
    assert parse_scalar(format_scalar(q), RATIONAL) == q


@given(st.integers(), st.integers(min_value=1))
def test_rational_parse_fraction(p, q):
    assert parse_scalar("%d/%d" % (p, q), RATIONAL) == mpq(p, q)


@given(st.complex_numbers(allow_nan=False, allow_infinity=False))
def test_complex_roundtrip(z):
    back = parse_scalar(format_scalar(z), COMPLEX)
    assert back == z  # repr round-trips doubles bit-exactly


def test_complex_accepts_rational_syntax():
    assert parse_scalar("-3/4", COMPLEX) == complex(-0.75)
    assert parse_scalar("2", COMPLEX) == complex(2)
    assert parse_scalar("1.5", COMPLEX) == complex(1.5)


def test_complex_imaginary_forms():
    assert parse_scalar("2i", COMPLEX) == 2j
    assert parse_scalar("-i", COMPLEX) == -1j
    assert parse_scalar("1+2i", COMPLEX) == 1 + 2j
    assert parse_scalar("0.5-0.25i", COMPLEX) == 0.5 - 0.25j


@pytest.mark.parametrize("bad", ["", "x", "1/", "/2", "1//2", "i2", "1+"])
def test_rational_rejects_garbage(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(bad, RATIONAL)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_scalar("1/0", RATIONAL)


def test_coerce_int_to_backend():
    assert scalars.coerce(3, RATIONAL) == mpq(3)
    assert scalars.coerce(3, COMPLEX) == complex(3)


def test_is_zero_rational_is_exact():
    tiny = mpq(1, 10 ** 40)
    assert not scalars.is_zero(tiny, EPS)
    assert scalars.is_zero(mpq(0), EPS)


def test_is_zero_complex_uses_eps():
    assert scalars.is_zero(1e-12 + 1e-12j, EPS)
    assert not scalars.is_zero(1e-6, EPS)


def test_format_complex_stable():
    w = cmath.exp(1j * cmath.pi / 3)
    assert format_scalar(w) == format_scalar(w)
    assert parse_scalar(format_scalar(w), COMPLEX) == w
