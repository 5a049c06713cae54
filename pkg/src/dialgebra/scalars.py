"""Field elements under two interchangeable backends.

RATIONAL: exact arbitrary-precision rationals (gmpy2.mpq), always kept in
canonical form (reduced, positive denominator, zero is 0/1 -- mpq does this
for us).  COMPLEX: double-precision complex numbers compared up to a
module-level tolerance EPS.  Containers carry the backend tag; scalars
themselves are raw mpq / complex values.
"""

import math
import re

from gmpy2 import mpq, mpz

RATIONAL = "rational"
COMPLEX = "complex"

EPS = 1e-9

_RAT_RE = re.compile(r"^[+-]?[0-9]+(?:/[+-]?[0-9]+)?$")
_UFLOAT = r"(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?"
_FLOAT = r"[+-]?" + _UFLOAT
_CPLX_RE = re.compile(
    r"^(?:(?P<re>%s)(?P<sgn>[+-])(?P<imu>%s)?|(?P<imo>[+-]?(?:%s)?))i$"
    % (_FLOAT, _UFLOAT, _UFLOAT))
_REAL_RE = re.compile(r"^%s$" % _FLOAT)


def canonicalize(num, den=1):
    """Reduced rational with positive denominator; (0, q) -> 0/1."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return mpq(num, den)


def zero(backend):
    return mpq(0) if backend == RATIONAL else complex(0.0)


def one(backend):
    return mpq(1) if backend == RATIONAL else complex(1.0)


def coerce(value, backend):
    """Bring an int / mpq / float / complex into the given backend."""
    if backend == RATIONAL:
        if isinstance(value, (int, mpz)):
            return mpq(value)
        if isinstance(value, mpq):
            return value
        raise TypeError("rational backend cannot hold %r" % (value,))
    if isinstance(value, complex):
        return value
    if isinstance(value, (int, float, mpz)):
        return complex(value)
    if isinstance(value, mpq):
        return complex(value.numerator) / complex(value.denominator)
    raise TypeError("complex backend cannot hold %r" % (value,))


def backend_of(value):
    if isinstance(value, mpq):
        return RATIONAL
    if isinstance(value, complex):
        return COMPLEX
    raise TypeError("not a scalar: %r" % (value,))


def approx_eq(a, b, eps=EPS):
    """Exact equality for rationals, |a-b| <= eps for complex."""
    ba, bb = backend_of(a), backend_of(b)
    if ba != bb:
        raise TypeError("backend mismatch")
    if ba == RATIONAL:
        return a == b
    return abs(a - b) <= eps


def is_zero(value, eps=EPS):
    if isinstance(value, mpq):
        return value == 0
    return abs(value) <= eps


def format_scalar(value):
    """Text form: rationals "p/q" or "p"; complex "a+bi" (repr precision,
    so the text round-trips bit-exactly through parse_scalar)."""
    if isinstance(value, mpq):
        if value.denominator == 1:
            return str(value.numerator)
        return "%s/%s" % (value.numerator, value.denominator)
    re_, im_ = value.real, value.imag
    if math.copysign(1.0, im_) < 0:  # covers -0.0, which compares >= 0
        return "%s-%si" % (repr(re_), repr(-im_))
    return "%s+%si" % (repr(re_), repr(im_))


def parse_scalar(text, backend):
    """Inverse of format_scalar for the given backend.

    Rational: "p" or "p/q".  Complex: "a+bi", bare real "a", or pure
    imaginary "bi".  Raises ValueError on anything else.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    if backend == RATIONAL:
        if not _RAT_RE.match(text):
            raise ValueError("not a rational: %r" % text)
        num_s, _, den_s = text.partition("/")
        den = int(den_s) if den_s else 1
        if den == 0:
            raise ZeroDivisionError("division by zero")
        return mpq(int(num_s), den)
    if backend != COMPLEX:
        raise ValueError("unknown backend: %r" % backend)
    if _RAT_RE.match(text):  # integers and p/q are welcome in complex files
        num_s, _, den_s = text.partition("/")
        den = float(den_s) if den_s else 1.0
        if den == 0:
            raise ZeroDivisionError("division by zero")
        return complex(int(num_s) / den)
    if _REAL_RE.match(text):
        return complex(float(text))
    m = _CPLX_RE.match(text)
    if not m:
        raise ValueError("not a complex value: %r" % text)
    if m.group("re") is not None:
        re_s = m.group("re")
        im_s = m.group("sgn") + (m.group("imu") or "1")
    else:
        re_s = "0"
        im_s = m.group("imo")
        if im_s in ("", "+"):
            im_s = "1"
        elif im_s == "-":
            im_s = "-1"
    return complex(float(re_s), float(im_s))
