"""
algebra/series.py
Dense truncated formal power series over the rationals.

A TruncatedSeries holds f_0..f_N exactly. Every operation returns a series
whose stored coefficients are exact; truncation propagates as the minimum
over the operands, minus one per derivative / backshift / division by x.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Tuple

from lif_toolkit.algebra import rational
from lif_toolkit.algebra.rational import ZERO, Rational, RationalLike, to_rational
from lif_toolkit.errors import (
    CompositionRequiresNonunit,
    NotAlmostUnit,
    NotDivisible,
    NotInvertible,
    PreconditionViolated,
    TruncationExceeded,
)

Mismatch = Tuple[int, Rational, Rational]


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: Tuple[Rational, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise PreconditionViolated("a series needs at least the constant coefficient")
        if not isinstance(self.coeffs, tuple) or not all(isinstance(c, Fraction) for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))

    @classmethod
    def of(cls, values: Iterable[RationalLike], truncation: Optional[int] = None) -> "TruncatedSeries":
        """Build from loose values, zero-padding (or cutting) to `truncation` when given."""
        coeffs = [to_rational(v) for v in values]
        if truncation is not None:
            if truncation < 0:
                raise PreconditionViolated(f"negative truncation {truncation}")
            coeffs = (coeffs + [ZERO] * (truncation + 1))[:truncation + 1]
        return cls(tuple(coeffs))

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Rational:
        return coeff(self, n)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return sub(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return neg(self)

    def __str__(self) -> str:
        return format_series(self)


@dataclass(frozen=True)
class Order:
    """Finite(k) when k is set; AboveTruncation when every stored coefficient is zero.
    The true order in the second case may be finite (beyond N) or infinite."""

    k: Optional[int] = None

    @classmethod
    def finite(cls, k: int) -> "Order":
        return cls(k)

    @property
    def is_finite(self) -> bool:
        return self.k is not None

    def __str__(self) -> str:
        return f"Finite({self.k})" if self.is_finite else "AboveTruncation"


ABOVE_TRUNCATION = Order()


# ── Construction ──────────────────────────────────────────────────────────────

def zero(truncation: int) -> TruncatedSeries:
    return TruncatedSeries.of([], truncation)


def constant(c: RationalLike, truncation: int) -> TruncatedSeries:
    return TruncatedSeries.of([c], truncation)


def monomial(l: int, truncation: int) -> TruncatedSeries:
    """x^l at truncation N."""
    if l < 0:
        raise PreconditionViolated(f"monomial exponent must be >= 0, got {l}")
    if l > truncation:
        raise TruncationExceeded(f"x^{l} does not fit truncation {truncation}")
    return TruncatedSeries.of([0] * l + [1], truncation)


def truncate(f: TruncatedSeries, m: int) -> TruncatedSeries:
    if m < 0 or m > f.truncation:
        raise TruncationExceeded(f"cannot truncate a series of order {f.truncation} at {m}")
    return TruncatedSeries(f.coeffs[:m + 1])


def _common(f: TruncatedSeries, g: TruncatedSeries) -> int:
    return min(f.truncation, g.truncation)


# ── Coefficient access ────────────────────────────────────────────────────────

def coeff(f: TruncatedSeries, n: int) -> Rational:
    """[x^n] f."""
    if n < 0 or n > f.truncation:
        raise TruncationExceeded(f"[x^{n}] is outside truncation {f.truncation}")
    return f.coeffs[n]


def first_mismatch(f: TruncatedSeries, g: TruncatedSeries, m: int) -> Optional[Mismatch]:
    if m > _common(f, g):
        raise TruncationExceeded(f"cannot compare through index {m} at truncation {_common(f, g)}")
    for i in range(m + 1):
        if f.coeffs[i] != g.coeffs[i]:
            return i, f.coeffs[i], g.coeffs[i]
    return None


def equal_upto(f: TruncatedSeries, g: TruncatedSeries, m: int) -> bool:
    return first_mismatch(f, g, m) is None


def order(f: TruncatedSeries) -> Order:
    for i, c in enumerate(f.coeffs):
        if c != 0:
            return Order.finite(i)
    return ABOVE_TRUNCATION


# ── Ring operations ───────────────────────────────────────────────────────────

def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = _common(f, g)
    return TruncatedSeries(tuple(f.coeffs[i] + g.coeffs[i] for i in range(n + 1)))


def sub(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = _common(f, g)
    return TruncatedSeries(tuple(f.coeffs[i] - g.coeffs[i] for i in range(n + 1)))


def neg(f: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(-c for c in f.coeffs))


def scale(c: RationalLike, f: TruncatedSeries) -> TruncatedSeries:
    c = to_rational(c)
    return TruncatedSeries(tuple(c * a for a in f.coeffs))


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product h_n = sum_{i<=n} f_i g_{n-i}, truncated at min(N_f, N_g)."""
    n = _common(f, g)
    out = [ZERO] * (n + 1)
    fc, gc = f.coeffs, g.coeffs
    for i in range(n + 1):
        fi = fc[i]
        if fi == 0:
            continue
        for j in range(n + 1 - i):
            if gc[j]:
                out[i + j] += fi * gc[j]
    return TruncatedSeries(tuple(out))


@lru_cache(maxsize=4096)
def power(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """f^k by repeated squaring; f^0 is x^0 at N_f."""
    if k < 0:
        raise PreconditionViolated(f"power needs k >= 0, got {k} (use signed_power)")
    result = monomial(0, f.truncation)
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


@lru_cache(maxsize=4096)
def mul_inverse(g: TruncatedSeries) -> TruncatedSeries:
    """h with g*h = x^0: h_0 = 1/g_0, h_n = -(1/g_0) sum_{i=1}^{n} g_i h_{n-i}."""
    g0 = g.coeffs[0]
    if g0 == 0:
        raise NotInvertible("constant coefficient is zero")
    inv_g0 = rational.inv(g0)
    h = [inv_g0]
    for n in range(1, g.truncation + 1):
        acc = ZERO
        for i in range(1, n + 1):
            if g.coeffs[i]:
                acc += g.coeffs[i] * h[n - i]
        h.append(-inv_g0 * acc)
    return TruncatedSeries(tuple(h))


def signed_power(g: TruncatedSeries, e: int) -> TruncatedSeries:
    """g^e, with negative e meaning powers of mul_inverse(g)."""
    if e >= 0:
        return power(g, e)
    return power(mul_inverse(g), -e)


def divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """The unique h with h*den = num, at truncation N_min - ord(den).

    x^d is cancelled from both sides first, so den may be a nonunit as long as
    num vanishes below its order.
    """
    n = _common(num, den)
    den_order = order(truncate(den, n))
    if not den_order.is_finite:
        raise NotDivisible("denominator has no nonzero coefficient within the truncation window")
    d = den_order.k
    for i in range(d):
        if num.coeffs[i] != 0:
            raise NotDivisible(f"numerator coefficient {i} is nonzero below the denominator order {d}")
    num_shifted = TruncatedSeries(num.coeffs[d:n + 1])
    den_shifted = TruncatedSeries(den.coeffs[d:n + 1])
    return mul(num_shifted, mul_inverse(den_shifted))


# ── Calculus ──────────────────────────────────────────────────────────────────

def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """[x^n] f' = (n+1) f_{n+1}; truncation drops by one."""
    if f.truncation < 1:
        raise TruncationExceeded("derivative of a series truncated at 0")
    return TruncatedSeries(tuple((n + 1) * f.coeffs[n + 1] for n in range(f.truncation)))


def backshift(f: TruncatedSeries) -> TruncatedSeries:
    """[x^n] f^ = [x^{n+1}] f. With f_0 = 0 this is f/x."""
    if f.truncation < 1:
        raise TruncationExceeded("backshift of a series truncated at 0")
    return TruncatedSeries(f.coeffs[1:])


def shift(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """x^k * f at the same truncation."""
    if k < 0:
        raise PreconditionViolated(f"shift needs k >= 0, got {k}")
    if k > f.truncation:
        return zero(f.truncation)
    return TruncatedSeries((ZERO,) * k + f.coeffs[:f.truncation + 1 - k])


def xmul(f: TruncatedSeries) -> TruncatedSeries:
    """x * f with the truncation raised by one (nothing is lost)."""
    return TruncatedSeries((ZERO,) + f.coeffs)


@lru_cache(maxsize=4096)
def compose(g: TruncatedSeries, f: TruncatedSeries) -> TruncatedSeries:
    """g(f) for a nonunit f, by Horner accumulation from g_N down to g_0."""
    if f.coeffs[0] != 0:
        raise CompositionRequiresNonunit("inner series has a nonzero constant term")
    n = _common(g, f)
    inner = truncate(f, n)
    result = constant(g.coeffs[n], n)
    for i in range(n - 1, -1, -1):
        result = mul(result, inner)
        result = TruncatedSeries((result.coeffs[0] + g.coeffs[i],) + result.coeffs[1:])
    return result


def is_almost_unit(f: TruncatedSeries) -> bool:
    return f.truncation >= 1 and f.coeffs[0] == 0 and f.coeffs[1] != 0


def require_almost_unit(f: TruncatedSeries) -> None:
    if f.truncation < 1:
        raise NotAlmostUnit("series truncated at 0 has no linear coefficient")
    if f.coeffs[0] != 0:
        raise NotAlmostUnit("constant coefficient must be 0")
    if f.coeffs[1] == 0:
        raise NotAlmostUnit("linear coefficient must be nonzero")


@lru_cache(maxsize=1024)
def comp_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse by order-by-order solving.

    With h = f-bar known through x^{n-1} and h_n = 0, [x^n] f(h) is linear in
    h_n with coefficient f_1, so h_n = -[x^n] f(h) / f_1.
    """
    require_almost_unit(f)
    n_max = f.truncation
    f1 = f.coeffs[1]
    h = [ZERO, rational.inv(f1)] + [ZERO] * (n_max - 1)
    for n in range(2, n_max + 1):
        window = TruncatedSeries(tuple(h[:n + 1]))
        acc = ZERO
        h_pow = window
        for i in range(1, n + 1):
            if i > 1:
                h_pow = mul(h_pow, window)
            if f.coeffs[i]:
                acc += f.coeffs[i] * h_pow.coeffs[n]
        h[n] = -acc / f1
    return TruncatedSeries(tuple(h))


# ── Text form ─────────────────────────────────────────────────────────────────

def format_series(f: TruncatedSeries) -> str:
    return ", ".join(rational.format_rational(c) for c in f.coeffs)


def parse_series(text: str) -> TruncatedSeries:
    parts = [p for p in (s.strip() for s in text.split(",")) if p]
    if not parts:
        raise PreconditionViolated("empty series text")
    return TruncatedSeries(tuple(rational.parse_rational(p) for p in parts))
