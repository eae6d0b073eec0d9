"""
validators/lif.py
Lagrange inversion coefficient extraction, in functional and
Schur-Jabotinsky form, plus the Kronecker-delta extraction used by the
calculus proof.

Both forms are computed from phi = x/f(x) only. comp_inverse is the oracle
they are compared against and is never used to compute them.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from lif_toolkit.algebra import rational
from lif_toolkit.algebra import series as ps
from lif_toolkit.algebra.rational import ONE, ZERO, Rational
from lif_toolkit.algebra.series import TruncatedSeries
from lif_toolkit.errors import NotInvertible, PreconditionViolated, TruncationExceeded


@dataclass(frozen=True)
class LifInput:
    """f almost unit, g arbitrary, n >= 1 and n <= min(N_f, N_g); 0 <= l <= n."""

    f: TruncatedSeries
    g: TruncatedSeries
    n: int
    l: int = 0

    def __post_init__(self):
        ps.require_almost_unit(self.f)
        if self.n < 1:
            raise PreconditionViolated(f"n must be positive, got {self.n}")
        if not 0 <= self.l <= self.n:
            raise PreconditionViolated(f"need 0 <= l <= n, got l={self.l}, n={self.n}")
        if self.n > self.f.truncation or self.n > self.g.truncation:
            raise TruncationExceeded(
                f"n={self.n} needs truncation >= n, have N_f={self.f.truncation}, N_g={self.g.truncation}"
            )


# ── phi <-> f ─────────────────────────────────────────────────────────────────

@lru_cache(maxsize=1024)
def phi_from_f(f: TruncatedSeries) -> TruncatedSeries:
    """phi = x/f(x), computed as the inverse of the backshifted f."""
    ps.require_almost_unit(f)
    return ps.mul_inverse(ps.backshift(f))


def phi_by_division(f: TruncatedSeries) -> TruncatedSeries:
    """phi = x/f(x), computed by series division."""
    ps.require_almost_unit(f)
    return ps.divide(ps.monomial(1, f.truncation), f)


def f_from_phi(phi: TruncatedSeries, truncation: Optional[int] = None) -> TruncatedSeries:
    """f = x / phi(x), so that f-bar(x) = x phi(f-bar(x))."""
    if phi.coeffs[0] == 0:
        raise NotInvertible("phi_0 must be nonzero")
    if truncation is None:
        truncation = phi.truncation + 1
    if truncation < 1:
        raise PreconditionViolated(f"truncation must be >= 1, got {truncation}")
    if truncation - 1 > phi.truncation:
        raise TruncationExceeded(
            f"f at truncation {truncation} needs phi through x^{truncation - 1}, have {phi.truncation}"
        )
    inv = ps.mul_inverse(ps.truncate(phi, truncation - 1))
    return TruncatedSeries((ZERO,) + inv.coeffs)


# ── Extraction ────────────────────────────────────────────────────────────────

def lif_functional(g: TruncatedSeries, f: TruncatedSeries, n: int) -> Rational:
    """[x^n] g(f-bar) = (1/n) [x^{n-1}] g'(x) phi(x)^n."""
    LifInput(f=f, g=g, n=n)
    phi = phi_from_f(f)
    phi_n = ps.power(ps.truncate(phi, n - 1), n)
    dg = ps.truncate(ps.derivative(g), n - 1)
    return rational.div_by_int(ps.coeff(ps.mul(dg, phi_n), n - 1), n)


def lif_schur_jabotinsky(f: TruncatedSeries, n: int, l: int) -> Rational:
    """[x^n] f-bar^l = (l/n) [x^{n-l}] phi(x)^n."""
    LifInput(f=f, g=f, n=n, l=l)
    if l == 0:
        return ZERO
    phi = ps.truncate(phi_from_f(f), n - l)
    return rational.div_by_int(l * ps.coeff(ps.power(phi, n), n - l), n)


def oracle_functional(g: TruncatedSeries, f: TruncatedSeries, n: int, fbar: Optional[TruncatedSeries] = None) -> Rational:
    """[x^n] g(f-bar) straight from the order-by-order inverse."""
    if fbar is None:
        fbar = ps.comp_inverse(f)
    return ps.coeff(ps.compose(g, fbar), n)


def oracle_schur_jabotinsky(f: TruncatedSeries, n: int, l: int, fbar: Optional[TruncatedSeries] = None) -> Rational:
    if fbar is None:
        fbar = ps.comp_inverse(f)
    return ps.coeff(ps.power(fbar, l), n)


def lemma1_value(g: TruncatedSeries, j: int, s: int) -> Rational:
    """[x^s] (x^j g^{j-s} + x^{j+1} g^{j-s-1} g').

    The x^j factor moves the extraction to [x^{s-j}], so each term is read
    off a series truncated at s; a term whose x-power exceeds s contributes 0.
    """
    if j < 0 or s < 0:
        raise PreconditionViolated(f"j and s must be >= 0, got j={j}, s={s}")
    if g.coeffs[0] == 0:
        raise NotInvertible("g_0 must be nonzero")
    if g.truncation < s + 1:
        raise TruncationExceeded(f"lemma extraction at s={s} needs N_g >= {s + 1}, have {g.truncation}")
    window = ps.truncate(g, s)
    dg = ps.truncate(ps.derivative(g), s)
    value = ZERO
    if j <= s:
        value += ps.coeff(ps.signed_power(window, j - s), s - j)
    if j + 1 <= s:
        value += ps.coeff(ps.mul(ps.signed_power(window, j - s - 1), dg), s - j - 1)
    return value


def kronecker_delta(j: int, s: int) -> Rational:
    return ONE if j == s else ZERO
