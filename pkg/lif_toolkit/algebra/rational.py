"""
algebra/rational.py
Exact coefficient field. Rational is fractions.Fraction: always stored in
lowest terms with a positive denominator, zero as 0/1.
"""
import re
from math import gcd
from fractions import Fraction
from typing import Union

from lif_toolkit.errors import DivisionByZero, PreconditionViolated

Rational = Fraction
RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r'^\s*([+-]?)(\d+)(?:/(\d+))?\s*$')


def to_rational(value: RationalLike) -> Rational:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise PreconditionViolated(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise PreconditionViolated(f"not a rational: {value!r}")


def parse_rational(text: str) -> Rational:
    """Parse "p/q", "-p/q" or "p". q = 0 is rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise PreconditionViolated(f"malformed rational {text!r}")
    sign, num, den = m.group(1), int(m.group(2)), m.group(3)
    if den is not None and int(den) == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    value = Fraction(num, int(den) if den is not None else 1)
    return -value if sign == "-" else value


def format_rational(a: Rational) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def is_canonical(a: Rational) -> bool:
    return a.denominator > 0 and gcd(abs(a.numerator), a.denominator) == 1


# ── Field operations ──────────────────────────────────────────────────────────

def add(a: Rational, b: Rational) -> Rational:
    return a + b


def sub(a: Rational, b: Rational) -> Rational:
    return a - b


def mul(a: Rational, b: Rational) -> Rational:
    return a * b


def neg(a: Rational) -> Rational:
    return -a


def inv(a: Rational) -> Rational:
    if a == 0:
        raise DivisionByZero("inverse of zero")
    return 1 / a


def div_by_int(a: Rational, n: int) -> Rational:
    """a / n for a positive integer n; carries the 1/n and l/n factors of both LIF forms."""
    if n == 0:
        raise DivisionByZero("division by the integer 0")
    if n < 0:
        raise PreconditionViolated(f"div_by_int needs n >= 1, got {n}")
    return a / n
