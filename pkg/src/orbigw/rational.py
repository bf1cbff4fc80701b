"""Exact rationals.

Every number in the engine is a ``gmpy2.mpq``.  It is always in lowest terms
with a positive denominator and is several times faster than
``fractions.Fraction`` on the long Cauchy products the engine performs.
"""

from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

from gmpy2 import mpq

__all__ = ["mpq", "Q", "ZERO", "ONE", "format_rational", "parse_rational",
           "frac_part", "floor_q", "is_integer", "lcm"]

ZERO = mpq(0)
ONE = mpq(1)


def Q(x, d=None):
    """Coerce ``x`` (int, str, Fraction, mpq) or ``x/d`` to an mpq."""
    if d is not None:
        return mpq(int(x), int(d))
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted: %r" % (x,))
    if isinstance(x, (int, _RationalABC)) or type(x) is type(ONE):
        return mpq(x)
    raise TypeError("cannot convert %r to a rational" % (x,))


def parse_rational(s):
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        if int(q) == 0:
            raise ValueError("zero denominator in %r" % s)
        return mpq(int(p), int(q))
    return mpq(int(s))


def format_rational(x):
    """``p/q`` or ``p`` with no decimal point."""
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def floor_q(x):
    x = mpq(x)
    return int(x.numerator // x.denominator)


def frac_part(x):
    """Fractional part <x> in [0, 1)."""
    x = mpq(x)
    return x - floor_q(x)


def is_integer(x):
    return mpq(x).denominator == 1


def lcm(values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def to_fraction(x):
    x = mpq(x)
    return Fraction(int(x.numerator), int(x.denominator))
