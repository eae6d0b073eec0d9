import random
from fractions import Fraction

import pytest

from lif_toolkit.algebra import rational
from lif_toolkit.errors import DivisionByZero, PreconditionViolated


def test_add_is_exact_and_reduced():
    assert rational.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rational.add(rational.ZERO, Fraction(-7, 3)) == Fraction(-7, 3)


def test_constructor_normalizes():
    value = rational.parse_rational("2/4")
    assert (value.numerator, value.denominator) == (1, 2)
    assert rational.is_canonical(value)


def test_mul_and_div_by_int():
    assert rational.mul(Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)
    assert rational.div_by_int(Fraction(20), 4) == Fraction(5)
    assert rational.div_by_int(Fraction(3, 2), 3) == Fraction(1, 2)


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        rational.inv(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        rational.inv(rational.ZERO)


def test_div_by_int_rejects_non_positive():
    with pytest.raises(DivisionByZero):
        rational.div_by_int(Fraction(1), 0)
    with pytest.raises(PreconditionViolated):
        rational.div_by_int(Fraction(1), -2)


@pytest.mark.parametrize("text, expected", [
    ("5", Fraction(5)),
    ("-3/2", Fraction(-3, 2)),
    ("+7/21", Fraction(1, 3)),
    ("0/9", Fraction(0)),
])
def test_parse_rational(text, expected):
    assert rational.parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1/", "a", "1.5", "--1", "1/-2"])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(PreconditionViolated):
        rational.parse_rational(text)


def test_parse_rational_rejects_zero_denominator():
    with pytest.raises(DivisionByZero):
        rational.parse_rational("3/0")


def test_format_rational_omits_unit_denominator():
    assert rational.format_rational(Fraction(5)) == "5"
    assert rational.format_rational(Fraction(-3, 2)) == "-3/2"
    assert rational.format_rational(Fraction(0)) == "0"


def test_zero_and_one_are_unique():
    assert (rational.ZERO.numerator, rational.ZERO.denominator) == (0, 1)
    assert rational.sub(Fraction(3, 7), Fraction(3, 7)).denominator == 1
    assert (rational.ONE.numerator, rational.ONE.denominator) == (1, 1)


def test_field_axioms_on_random_triples():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(3))
        assert rational.add(rational.add(a, b), c) == rational.add(a, rational.add(b, c))
        assert rational.mul(rational.mul(a, b), c) == rational.mul(a, rational.mul(b, c))
        assert rational.add(a, b) == rational.add(b, a)
        assert rational.mul(a, b) == rational.mul(b, a)
        assert rational.mul(a, rational.add(b, c)) == rational.add(rational.mul(a, b), rational.mul(a, c))
        assert rational.add(a, rational.neg(a)) == 0
        if a:
            assert rational.mul(a, rational.inv(a)) == 1
        for result in (rational.add(a, b), rational.mul(a, b), rational.neg(c)):
            assert rational.is_canonical(result)
