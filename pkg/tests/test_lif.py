import math
from fractions import Fraction

import pytest

from lif_toolkit.algebra import series as ps
from lif_toolkit.errors import NotAlmostUnit, NotInvertible, PreconditionViolated, TruncationExceeded
from lif_toolkit.parsers.evaluator import exp_series
from lif_toolkit.validators import lif
from lif_toolkit.validators.suite import random_almost_unit, random_series, random_unit

from conftest import series


class TestPhi:
    def test_phi_of_catalan_f_is_geometric(self, catalan_f):
        assert lif.phi_from_f(catalan_f) == series(*[1] * 10)

    def test_phi_of_identity(self):
        assert lif.phi_from_f(ps.monomial(1, 5)) == ps.monomial(0, 4)

    def test_phi_of_cayley_f_is_exp(self, cayley_f):
        phi = lif.phi_from_f(cayley_f)
        assert phi.truncation == 9
        assert phi == exp_series(9)

    def test_phi_zero_coefficient(self):
        assert lif.phi_from_f(series(0, 4, 1, N=3)).coeffs[0] == Fraction(1, 4)

    def test_phi_requires_almost_unit(self):
        with pytest.raises(NotAlmostUnit):
            lif.phi_from_f(series(0, 0, 1))

    def test_phi_two_ways_agree(self, rng):
        for _ in range(10):
            f = random_almost_unit(rng, 8)
            assert lif.phi_from_f(f) == lif.phi_by_division(f)

    def test_f_from_phi(self, catalan_f, cayley_f):
        assert lif.f_from_phi(ps.constant(1, 4)) == ps.monomial(1, 5)
        assert lif.f_from_phi(series(1, 1, 1, 1, 1, 1, 1, 1, 1, 1)) == catalan_f
        assert lif.f_from_phi(exp_series(9)) == cayley_f

    def test_f_from_phi_explicit_truncation(self):
        assert lif.f_from_phi(series(1, 1, 1, 1), truncation=2) == series(0, 1, -1)
        with pytest.raises(TruncationExceeded):
            lif.f_from_phi(series(1, 1), truncation=4)

    def test_f_from_phi_needs_unit(self):
        with pytest.raises(NotInvertible):
            lif.f_from_phi(series(0, 1, 1))

    def test_f_from_phi_round_trip(self, rng):
        phi = random_unit(rng, 7)
        assert lif.phi_from_f(lif.f_from_phi(phi)) == phi


class TestFunctionalForm:
    def test_base_case_value(self, rng):
        f = random_almost_unit(rng, 6)
        g = random_series(rng, 6)
        assert lif.lif_functional(g, f, 1) == g.coeffs[1] * lif.phi_from_f(f).coeffs[0]

    def test_identity_f_returns_g(self, rng):
        g = random_series(rng, 6)
        x = ps.monomial(1, 6)
        for n in range(1, 7):
            assert lif.lif_functional(g, x, n) == g.coeffs[n]

    def test_catalan(self, catalan_f):
        assert lif.lif_functional(ps.monomial(1, 10), catalan_f, 4) == 5

    def test_square_of_catalan_inverse(self, catalan_f):
        assert lif.lif_functional(ps.monomial(2, 10), catalan_f, 4) == 5

    def test_agrees_with_oracle(self, rng):
        for _ in range(5):
            f = random_almost_unit(rng, 8)
            g = random_series(rng, 8)
            for n in range(1, 9):
                assert lif.lif_functional(g, f, n) == lif.oracle_functional(g, f, n)

    def test_needs_enough_truncation(self, catalan_f):
        with pytest.raises(TruncationExceeded):
            lif.lif_functional(ps.monomial(1, 3), catalan_f, 4)

    def test_rejects_non_positive_n(self, catalan_f):
        with pytest.raises(PreconditionViolated):
            lif.lif_functional(catalan_f, catalan_f, 0)


class TestSchurJabotinsky:
    def test_l_equals_n(self):
        f = series(0, 2, 1, N=6)
        for n in range(1, 6):
            assert lif.lif_schur_jabotinsky(f, n, n) == Fraction(1, 2) ** n

    def test_l_zero(self, catalan_f):
        assert lif.lif_schur_jabotinsky(catalan_f, 3, 0) == 0

    def test_catalan(self, catalan_f):
        assert lif.lif_schur_jabotinsky(catalan_f, 4, 1) == 5

    def test_cayley(self, cayley_f):
        for n in range(1, 9):
            assert lif.lif_schur_jabotinsky(cayley_f, n, 1) == Fraction(n ** (n - 1), math.factorial(n))

    def test_l_above_n(self, catalan_f):
        with pytest.raises(PreconditionViolated):
            lif.lif_schur_jabotinsky(catalan_f, 2, 3)

    def test_agrees_with_oracle(self, rng):
        f = random_almost_unit(rng, 8)
        for n in range(1, 9):
            for l in range(n + 1):
                assert lif.lif_schur_jabotinsky(f, n, l) == lif.oracle_schur_jabotinsky(f, n, l)


class TestLemma1:
    def test_diagonal(self, rng):
        g = random_unit(rng, 6)
        assert lif.lemma1_value(g, 3, 3) == 1

    def test_below_diagonal(self):
        assert lif.lemma1_value(series(1, 1, N=2), 0, 1) == 0

    def test_above_diagonal(self, rng):
        g = random_unit(rng, 4)
        assert lif.lemma1_value(g, 2, 0) == 0

    def test_grid_is_kronecker_delta(self, rng):
        g = random_unit(rng, 9)
        for j in range(9):
            for s in range(9):
                assert lif.lemma1_value(g, j, s) == lif.kronecker_delta(j, s)

    def test_needs_unit(self):
        with pytest.raises(NotInvertible):
            lif.lemma1_value(series(0, 1, 1), 1, 1)

    def test_needs_truncation_above_s(self):
        with pytest.raises(TruncationExceeded):
            lif.lemma1_value(series(1, 1, 1), 2, 2)
