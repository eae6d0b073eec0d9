from .rational import Rational, format_rational, parse_rational
from .series import (
    ABOVE_TRUNCATION,
    Order,
    TruncatedSeries,
    backshift,
    coeff,
    comp_inverse,
    compose,
    derivative,
    divide,
    monomial,
    mul_inverse,
    order,
    power,
)
