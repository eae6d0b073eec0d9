from fractions import Fraction

import pytest

from lif_toolkit.algebra import series as ps
from lif_toolkit.algebra.series import ABOVE_TRUNCATION, Order, TruncatedSeries
from lif_toolkit.errors import (
    CompositionRequiresNonunit,
    NotAlmostUnit,
    NotDivisible,
    NotInvertible,
    PreconditionViolated,
    TruncationExceeded,
)
from lif_toolkit.validators.suite import random_almost_unit, random_nonunit, random_series, random_unit

from conftest import series


def values(f):
    return list(f.coeffs)


# ── Construction ──────────────────────────────────────────────────────────────

class TestConstruction:
    def test_monomial(self):
        assert values(ps.monomial(0, 4)) == [1, 0, 0, 0, 0]
        assert values(ps.monomial(2, 4)) == [0, 0, 1, 0, 0]

    def test_monomial_beyond_truncation(self):
        with pytest.raises(TruncationExceeded):
            ps.monomial(5, 4)

    def test_of_pads_and_cuts(self):
        assert values(TruncatedSeries.of([1, 2], 3)) == [1, 2, 0, 0]
        assert values(TruncatedSeries.of([1, 2, 3, 4], 1)) == [1, 2]
        assert TruncatedSeries.of(["1/2", 3]).coeffs == (Fraction(1, 2), Fraction(3))

    def test_list_of_fractions_is_stored_as_tuple(self):
        f = TruncatedSeries([Fraction(1), Fraction(1)])
        assert isinstance(f.coeffs, tuple)
        assert values(ps.power(f, 2)) == [1, 2]
        assert hash(f) == hash(series(1, 1))
        assert ps.mul_inverse(f) == TruncatedSeries([1, -1])

    def test_empty_series_rejected(self):
        with pytest.raises(PreconditionViolated):
            TruncatedSeries(())

    def test_truncation_zero_is_legal(self):
        f = ps.constant(3, 0)
        assert f.truncation == 0
        assert values(ps.mul(f, f)) == [9]
        with pytest.raises(TruncationExceeded):
            ps.derivative(f)
        with pytest.raises(TruncationExceeded):
            ps.backshift(f)


# ── Ring operations ───────────────────────────────────────────────────────────

class TestRing:
    def test_add(self):
        assert values(series(1, 1) + series(0, -1)) == [1, 0]

    def test_add_takes_min_truncation(self):
        assert ps.add(series(1, 1, 1), series(1, 1)).truncation == 1

    def test_scale(self):
        f = series(3, -1, 2)
        assert ps.scale(0, f) == ps.zero(2)
        assert values(ps.scale(2, series(1, Fraction(1, 2)))) == [2, 1]

    def test_mul(self):
        assert values(series(1, 1, N=3) * series(1, -1, N=3)) == [1, 0, -1, 0]
        assert values(series(1, 1, 1) * series(1, 1, N=2)) == [1, 2, 2]

    def test_mul_by_zero(self, rng):
        f = random_series(rng, 6)
        assert ps.mul(f, ps.zero(6)) == ps.zero(6)

    def test_sub_and_neg(self):
        f = series(1, 2, 3)
        assert ps.sub(f, f) == ps.zero(2)
        assert values(-f) == [-1, -2, -3]

    @pytest.mark.parametrize("f, expected", [
        (series(0, 0, 3, 0), Order.finite(2)),
        (series(0, 0, 0, 0), ABOVE_TRUNCATION),
        (series(5), Order.finite(0)),
    ])
    def test_order(self, f, expected):
        assert ps.order(f) == expected

    def test_order_str(self):
        assert str(Order.finite(2)) == "Finite(2)"
        assert str(ABOVE_TRUNCATION) == "AboveTruncation"

    def test_order_additivity(self, rng):
        for _ in range(30):
            a, b = rng.randint(0, 3), rng.randint(0, 3)
            f = ps.shift(random_unit(rng, 8), a)
            g = ps.shift(random_unit(rng, 8), b)
            assert ps.order(f * g) == Order.finite(a + b)

    def test_power(self):
        assert values(ps.power(series(0, 1, -1), 0)) == [1, 0, 0]
        assert values(ps.power(series(1, 1, N=2), 2)) == [1, 2, 1]
        assert values(ps.power(series(0, 1, N=4), 3)) == [0, 0, 0, 1, 0]

    def test_power_matches_repeated_mul(self, rng):
        f = random_series(rng, 7)
        expected = ps.monomial(0, 7)
        for k in range(6):
            assert ps.power(f, k) == expected
            expected = ps.mul(expected, f)

    def test_power_rejects_negative(self):
        with pytest.raises(PreconditionViolated):
            ps.power(series(1, 1), -1)

    def test_signed_power(self):
        g = series(1, -1, N=4)
        assert values(ps.signed_power(g, -2)) == [1, 2, 3, 4, 5]
        assert ps.signed_power(g, 2) == ps.power(g, 2)


# ── Division ──────────────────────────────────────────────────────────────────

class TestDivision:
    def test_mul_inverse(self):
        assert values(ps.mul_inverse(series(1, -1, N=4))) == [1, 1, 1, 1, 1]
        assert values(ps.mul_inverse(series(1, 1, N=3))) == [1, -1, 1, -1]

    def test_mul_inverse_of_nonunit(self):
        with pytest.raises(NotInvertible):
            ps.mul_inverse(series(0, 1, 2))

    def test_mul_inverse_is_exact(self, rng):
        for _ in range(20):
            g = random_unit(rng, 10)
            assert ps.mul(g, ps.mul_inverse(g)) == ps.monomial(0, 10)

    def test_divide_cancels_common_power_of_x(self):
        q = ps.divide(ps.monomial(1, 5), series(0, 1, -1, N=5))
        assert values(q) == [1, 1, 1, 1, 1]
        assert q.truncation == 4

    def test_divide_by_x(self):
        assert values(ps.divide(series(0, 1, -1, N=3), ps.monomial(1, 3))) == [1, -1, 0]

    def test_divide_not_divisible(self):
        with pytest.raises(NotDivisible):
            ps.divide(ps.constant(1, 3), ps.monomial(1, 3))
        with pytest.raises(NotDivisible):
            ps.divide(ps.constant(1, 3), ps.zero(3))

    def test_divide_undoes_mul(self, rng):
        for _ in range(20):
            f = random_series(rng, 8)
            g = random_unit(rng, 8)
            assert ps.divide(ps.mul(f, g), g) == f


# ── Calculus ──────────────────────────────────────────────────────────────────

class TestCalculus:
    def test_derivative(self):
        assert values(ps.derivative(series(1, 2, 3))) == [2, 6]
        assert ps.derivative(ps.monomial(0, 4)) == ps.zero(3)
        assert values(ps.derivative(series(1, 1, 1, 1, 1))) == [1, 2, 3, 4]

    def test_backshift(self):
        assert values(ps.backshift(series(0, 2, 3))) == [2, 3]
        assert ps.backshift(ps.monomial(1, 5)) == ps.monomial(0, 4)

    def test_backshift_of_catalan_f(self, catalan_f):
        fhat = ps.backshift(catalan_f)
        assert values(ps.truncate(fhat, 2)) == [1, -1, 0]
        assert ps.mul_inverse(fhat) == ps.divide(ps.monomial(1, 10), catalan_f)

    def test_shift_and_xmul(self):
        f = series(1, 2, 3)
        assert values(ps.shift(f, 1)) == [0, 1, 2]
        assert ps.shift(f, 5) == ps.zero(2)
        assert values(ps.xmul(f)) == [0, 1, 2, 3]


# ── Composition ───────────────────────────────────────────────────────────────

class TestComposition:
    def test_compose(self):
        assert values(ps.compose(series(1, 1, 1), series(0, 2, N=2))) == [1, 2, 4]
        geometric = series(1, 1, 1, 1, 1, 1)
        assert values(ps.compose(geometric, ps.monomial(2, 5))) == [1, 0, 1, 0, 1, 0]

    def test_compose_with_identity(self, rng):
        g = random_series(rng, 6)
        assert ps.compose(g, ps.monomial(1, 6)) == g

    def test_compose_rejects_unit_inner(self):
        with pytest.raises(CompositionRequiresNonunit):
            ps.compose(series(1, 1), series(1, 1))

    def test_compose_accepts_zero_linear_term(self):
        assert values(ps.compose(series(0, 1, N=4), series(0, 0, 1, N=4))) == [0, 0, 1, 0, 0]

    def test_comp_inverse_catalan(self):
        assert values(ps.comp_inverse(series(0, 1, -1, N=5))) == [0, 1, 1, 2, 5, 14]

    def test_comp_inverse_linear(self):
        x = ps.monomial(1, 4)
        assert ps.comp_inverse(x) == x
        assert values(ps.comp_inverse(series(0, 2, N=3))) == [0, Fraction(1, 2), 0, 0]

    @pytest.mark.parametrize("f", [series(1, 1, N=3), series(0, 0, 1, N=3), ps.constant(0, 0)])
    def test_comp_inverse_needs_almost_unit(self, f):
        with pytest.raises(NotAlmostUnit):
            ps.comp_inverse(f)

    def test_comp_inverse_is_two_sided(self, rng):
        for _ in range(10):
            f = random_almost_unit(rng, 10)
            fbar = ps.comp_inverse(f)
            x = ps.monomial(1, 10)
            assert ps.compose(f, fbar) == x
            assert ps.compose(fbar, f) == x

    def test_right_distributive(self, rng):
        f, g = random_series(rng, 6), random_series(rng, 6)
        h = random_nonunit(rng, 6)
        assert ps.compose(f * g, h) == ps.compose(f, h) * ps.compose(g, h)


# ── Access and text ───────────────────────────────────────────────────────────

class TestAccess:
    def test_coeff(self):
        f = series(0, 1, 1, 2, 5)
        assert ps.coeff(f, 4) == 5
        assert f[3] == 2
        with pytest.raises(TruncationExceeded):
            ps.coeff(f, 5)

    def test_equal_upto(self, rng):
        f = random_series(rng, 5)
        assert ps.equal_upto(f, f, 5)
        assert ps.equal_upto(series(1, 2, 3), series(1, 2, 4), 1)
        assert not ps.equal_upto(series(1, 2, 3), series(1, 2, 4), 2)
        with pytest.raises(TruncationExceeded):
            ps.equal_upto(f, f, 6)

    def test_first_mismatch(self):
        assert ps.first_mismatch(series(1, 2, 3), series(1, 5, 4), 2) == (1, 2, 5)
        assert ps.first_mismatch(series(1, 2), series(1, 2), 1) is None

    def test_truncate(self):
        assert values(ps.truncate(series(1, 2, 3), 1)) == [1, 2]
        with pytest.raises(TruncationExceeded):
            ps.truncate(series(1, 2), 3)

    def test_text_form(self):
        f = series(0, Fraction(-1, 2), 3)
        assert ps.format_series(f) == "0, -1/2, 3"
        assert str(f) == "0, -1/2, 3"
        assert ps.parse_series("0, -1/2, 3") == f

    def test_parse_series_rejects_empty(self):
        with pytest.raises(PreconditionViolated):
            ps.parse_series(" , ")
