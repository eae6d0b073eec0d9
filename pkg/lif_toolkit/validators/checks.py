"""
validators/checks.py
Identity checks. Each check evaluates both sides of one identity with exact
arithmetic and returns a VerifyReport naming the first index where they differ.
"""
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from lif_toolkit.algebra import rational
from lif_toolkit.algebra import series as ps
from lif_toolkit.algebra.rational import ZERO, Rational
from lif_toolkit.algebra.series import TruncatedSeries
from lif_toolkit.errors import PreconditionViolated
from lif_toolkit.validators import lif

Pair = Tuple[int, Rational, Rational]


class Mismatch(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    index: int
    lhs: Fraction
    rhs: Fraction

    @field_serializer("lhs", "rhs")
    def _as_text(self, value: Fraction) -> str:
        return rational.format_rational(value)


class VerifyReport(BaseModel):
    """JSON form: {"check", "passed", "mismatch", "seed"}; trial and detail are plain-output only."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    check_name: str = Field(serialization_alias="check")
    passed: bool
    first_mismatch: Optional[Mismatch] = Field(None, serialization_alias="mismatch")
    seed: int = Field(0, ge=0, le=2 ** 64 - 1)
    trial: int = Field(0, exclude=True)
    detail: str = Field("", exclude=True)

    @model_validator(mode="after")
    def _passed_iff_no_mismatch(self):
        if self.passed != (self.first_mismatch is None):
            raise ValueError("passed must be true exactly when first_mismatch is absent")
        return self

    def to_json_dict(self) -> dict:
        return self.model_dump(by_alias=True)


def report_from_pairs(name: str, pairs: Iterable[Pair], seed: int = 0, trial: int = 0, detail: str = "") -> VerifyReport:
    """Walk (index, lhs, rhs) triples in order and stop at the first disagreement."""
    for index, lhs, rhs in pairs:
        if lhs != rhs:
            return VerifyReport(
                check_name=name, passed=False, seed=seed, trial=trial, detail=detail,
                first_mismatch=Mismatch(index=index, lhs=lhs, rhs=rhs),
            )
    return VerifyReport(check_name=name, passed=True, seed=seed, trial=trial, detail=detail)


def report_from_series(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, upto: Optional[int] = None,
                       seed: int = 0, trial: int = 0, detail: str = "") -> VerifyReport:
    if upto is None:
        upto = min(lhs.truncation, rhs.truncation)
    found = ps.first_mismatch(lhs, rhs, upto)
    pairs = [] if found is None else [found]
    return report_from_pairs(name, pairs, seed=seed, trial=trial, detail=detail)


def earliest_mismatch(*found: Optional[Pair]) -> List[Pair]:
    """The lowest-index mismatch among several windows, as a pair list for report_from_pairs."""
    return sorted((m for m in found if m is not None), key=lambda m: m[0])[:1]


def _oracle(f: TruncatedSeries, fbar: Optional[TruncatedSeries]) -> TruncatedSeries:
    return ps.comp_inverse(f) if fbar is None else fbar


# ── Calculus rules ────────────────────────────────────────────────────────────

def check_product_rule(f, g, **meta) -> VerifyReport:
    lhs = ps.derivative(ps.mul(f, g))
    rhs = ps.add(ps.mul(ps.derivative(f), g), ps.mul(f, ps.derivative(g)))
    return report_from_series("product_rule", lhs, rhs, **meta)


def check_power_rule(f, k: int, **meta) -> VerifyReport:
    lhs = ps.derivative(ps.power(f, k + 1))
    rhs = ps.scale(k + 1, ps.mul(ps.power(f, k), ps.derivative(f)))
    return report_from_series("power_rule", lhs, rhs, **meta)


def check_chain_rule(f, h, **meta) -> VerifyReport:
    lhs = ps.derivative(ps.compose(f, h))
    rhs = ps.mul(ps.compose(ps.derivative(f), h), ps.derivative(h))
    return report_from_series("chain_rule", lhs, rhs, **meta)


def check_term_by_term(f, h, **meta) -> VerifyReport:
    """[x^n](f o h)' against [x^n] sum_{i<=n+1} f_i (h^i)' for every n <= N-1."""
    lhs = ps.derivative(ps.compose(f, h))
    n_max = lhs.truncation
    rhs = ps.zero(n_max)
    for i in range(n_max + 2):
        rhs = ps.add(rhs, ps.scale(f.coeffs[i], ps.derivative(ps.power(ps.truncate(h, n_max + 1), i))))
    return report_from_series("term_by_term", lhs, rhs, **meta)


def check_right_distributive(f, g, h, **meta) -> VerifyReport:
    lhs = ps.compose(ps.mul(f, g), h)
    rhs = ps.mul(ps.compose(f, h), ps.compose(g, h))
    return report_from_series("right_distributive", lhs, rhs, **meta)


# ── Arithmetic invariants ─────────────────────────────────────────────────────

def check_mul_inverse(g, **meta) -> VerifyReport:
    lhs = ps.mul(g, ps.mul_inverse(g))
    return report_from_series("mul_inverse", lhs, ps.monomial(0, g.truncation), **meta)


def check_divide_roundtrip(f, g, **meta) -> VerifyReport:
    """divide(f*g, g) = f on the window divide leaves."""
    quotient = ps.divide(ps.mul(f, g), g)
    return report_from_series("divide_roundtrip", quotient, f, **meta)


def check_inverse_roundtrip(f, fbar=None, **meta) -> VerifyReport:
    """f(f-bar) = x and f-bar(f) = x."""
    fbar = _oracle(f, fbar)
    x = ps.monomial(1, f.truncation)
    left = ps.first_mismatch(ps.compose(f, fbar), x, f.truncation)
    right = ps.first_mismatch(ps.compose(fbar, f), x, f.truncation)
    return report_from_pairs("inverse_roundtrip", earliest_mismatch(left, right), **meta)


def check_phi_agreement(f, **meta) -> VerifyReport:
    """mul_inverse(backshift(f)) and divide(x, f) are the same phi."""
    return report_from_series("phi_agreement", lif.phi_from_f(f), lif.phi_by_division(f), **meta)


# ── Both theorems ─────────────────────────────────────────────────────────────

def check_functional_form(g, f, fbar=None, **meta) -> VerifyReport:
    fbar = _oracle(f, fbar)
    n_max = min(f.truncation, g.truncation)
    pairs = (
        (n, lif.lif_functional(g, f, n), lif.oracle_functional(g, f, n, fbar=fbar))
        for n in range(1, n_max + 1)
    )
    return report_from_pairs("theorem1", pairs, **meta)


def check_schur_jabotinsky_form(f, fbar=None, **meta) -> VerifyReport:
    fbar = _oracle(f, fbar)
    n_max = f.truncation

    def pairs():
        for l in range(1, n_max + 1):
            fbar_l = ps.power(fbar, l)
            for n in range(l, n_max + 1):
                yield n, lif.lif_schur_jabotinsky(f, n, l), ps.coeff(fbar_l, n)

    return report_from_pairs("theorem2", sorted(pairs(), key=lambda p: p[0]), **meta)


def check_linkage(g, f, **meta) -> VerifyReport:
    """sum_l g_l * SJ(n, l) = functional(n)."""
    n_max = min(f.truncation, g.truncation)

    def pairs():
        for n in range(1, n_max + 1):
            total = sum((g.coeffs[l] * lif.lif_schur_jabotinsky(f, n, l) for l in range(n + 1)), ZERO)
            yield n, total, lif.lif_functional(g, f, n)

    return report_from_pairs("linkage", pairs(), **meta)


def check_lemma1_grid(g, size: int = 12, **meta) -> VerifyReport:
    if g.truncation < size + 1:
        raise PreconditionViolated(f"lemma grid of size {size} needs N_g >= {size + 1}")
    pairs = (
        (s, lif.lemma1_value(g, j, s), lif.kronecker_delta(j, s))
        for s in range(size + 1)
        for j in range(size + 1)
    )
    return report_from_pairs("lemma1", pairs, **meta)


# ── Inductive proof ───────────────────────────────────────────────────────────

def check_base_case(g, f, fbar=None, **meta) -> VerifyReport:
    """[x^1] g(f-bar) = g_1 phi_0."""
    fbar = _oracle(f, fbar)
    phi0 = lif.phi_from_f(f).coeffs[0]
    rhs = g.coeffs[1] * phi0
    pairs = [
        (1, lif.oracle_functional(g, f, 1, fbar=fbar), rhs),
        (1, lif.lif_functional(g, f, 1), rhs),
    ]
    return report_from_pairs("base_case", pairs, **meta)


def check_induction_step(f, n: int, l: int, fbar=None, **meta) -> VerifyReport:
    """One step n -> n+1 of the induction at exponent l.

    [x^{n+1}] f-bar^{l+1} = [x^n] f-bar^l phi(f-bar)
                          = (1/n) [x^{n-1}] (x^l phi)' phi^n
                          = (1/n)(l [x^{n-l}] phi^{n+1} + [x^{n-l-1}] (phi^{n+1})' / (n+1))
                          = (l+1)/(n+1) [x^{n-l}] phi^{n+1}
    """
    if n < 1 or l < 0:
        raise PreconditionViolated(f"need n >= 1 and l >= 0, got n={n}, l={l}")
    ps.require_almost_unit(f)
    if f.truncation < n + 1:
        raise PreconditionViolated(f"induction step at n={n} needs truncation >= {n + 1}")
    fbar = _oracle(f, fbar)
    phi = lif.phi_from_f(f)
    phi_n1 = ps.power(phi, n + 1)

    def extract(h: TruncatedSeries, k: int) -> Rational:
        return ps.coeff(h, k) if k >= 0 else ZERO

    start = ps.coeff(ps.power(fbar, l + 1), n + 1)
    substituted = ps.coeff(ps.mul(ps.power(fbar, l), ps.compose(phi, fbar)), n)
    if l <= phi.truncation:
        g = ps.mul(ps.monomial(l, phi.truncation), phi)
        via_lif = lif.lif_functional(g, f, n)
    else:
        via_lif = ZERO
    grouped = rational.div_by_int(
        l * extract(phi_n1, n - l)
        + rational.div_by_int(extract(ps.derivative(phi_n1), n - l - 1), n + 1),
        n,
    )
    closed = Fraction(l + 1, n + 1) * extract(phi_n1, n - l)
    pairs = [(n + 1, start, substituted), (n + 1, substituted, via_lif),
             (n + 1, via_lif, grouped), (n + 1, grouped, closed)]
    return report_from_pairs("induction_step", pairs, detail=f"n={n} l={l}", **meta)


# ── Calculus proof ────────────────────────────────────────────────────────────

def _eq1_terms(f: TruncatedSeries, l: int, n_max: int, fbar: TruncatedSeries):
    fbar_l = ps.power(ps.truncate(fbar, n_max), l)
    return [(i, i * fbar_l.coeffs[i]) for i in range(l, n_max + 1)]


def check_eq1(f, l: int, N: int, fbar=None, **meta) -> VerifyReport:
    """sum_{i=l}^{N} i [x^i]f-bar^l f^{i-1} f' = l x^{l-1} through index N-1.

    Terms i > N start at x^{i-1} >= x^N and cannot reach the window; the
    cutoff is checked by confirming f^N f' vanishes there.
    """
    ps.require_almost_unit(f)
    if not 1 <= l <= N:
        raise PreconditionViolated(f"need 1 <= l <= N, got l={l}, N={N}")
    if N > f.truncation:
        raise PreconditionViolated(f"N={N} exceeds the truncation {f.truncation} of f")
    fbar = _oracle(f, fbar)
    fn = ps.truncate(f, N)
    df = ps.derivative(fn)
    lhs = ps.zero(N - 1)
    for i, c in _eq1_terms(fn, l, N, fbar):
        if c:
            lhs = ps.add(lhs, ps.scale(c, ps.mul(ps.power(fn, i - 1), df)))
    rhs = ps.scale(l, ps.monomial(l - 1, N - 1))
    tail = ps.mul(ps.power(fn, N), df)
    pairs = earliest_mismatch(ps.first_mismatch(lhs, rhs, N - 1), ps.first_mismatch(tail, ps.zero(N - 1), N - 1))
    return report_from_pairs("eq1", pairs, detail=f"l={l} N={N}", **meta)


def check_backshifted_eq1(f, l: int, N: int, fbar=None, **meta) -> VerifyReport:
    """sum_i i [x^i]f-bar^l x^{i-l} (f^^i + x f^^{i-1} f^') = l x^0 through index N-l."""
    ps.require_almost_unit(f)
    if not 1 <= l <= N:
        raise PreconditionViolated(f"need 1 <= l <= N, got l={l}, N={N}")
    if N > f.truncation:
        raise PreconditionViolated(f"N={N} exceeds the truncation {f.truncation} of f")
    fbar = _oracle(f, fbar)
    window = N - l
    fhat = ps.truncate(ps.backshift(f), window)
    if window >= 1:
        dfhat = ps.truncate(ps.derivative(ps.backshift(f)), window - 1)
    lhs = ps.zero(window)
    for i, c in _eq1_terms(f, l, N, fbar):
        if not c:
            continue
        body = ps.power(fhat, i)
        if window >= 1:
            body = ps.add(body, ps.xmul(ps.mul(ps.power(fhat, i - 1), dfhat)))
        lhs = ps.add(lhs, ps.scale(c, ps.shift(body, i - l)))
    rhs = ps.scale(l, ps.monomial(0, window))
    return report_from_series("backshifted_eq1", lhs, rhs, detail=f"l={l} N={N}", **meta)


def check_sj_chain(f, n: int, l: int, fbar=None, **meta) -> VerifyReport:
    """Closing extraction of the calculus proof for n > l > 0.

    After multiplying by f^^{-n}, at [x^{n-l}] every term l <= i < n vanishes,
    term i = n gives n [x^n] f-bar^l, and the sum equals l [x^{n-l}] f^^{-n}.
    """
    if not 0 < l < n:
        raise PreconditionViolated(f"need 0 < l < n, got l={l}, n={n}")
    ps.require_almost_unit(f)
    if f.truncation < n + 1:
        raise PreconditionViolated(f"chain at n={n} needs truncation >= {n + 1}")
    fbar = _oracle(f, fbar)
    s = n - l
    fhat = ps.truncate(ps.backshift(f), s)
    dfhat = ps.truncate(ps.derivative(ps.backshift(f)), s)
    fbar_l = ps.power(fbar, l)

    def term(i: int) -> Rational:
        body = ps.add(
            ps.shift(ps.signed_power(fhat, i - n), i - l),
            ps.shift(ps.mul(ps.signed_power(fhat, i - n - 1), dfhat), i - l + 1),
        )
        return i * fbar_l.coeffs[i] * body.coeffs[s]

    pairs = [(i, term(i), ZERO) for i in range(l, n)]
    last = term(n)
    pairs.append((n, last, n * fbar_l.coeffs[n]))
    total = sum((p[1] for p in pairs), ZERO)
    pairs.append((n, total, l * ps.signed_power(fhat, -n).coeffs[s]))
    return report_from_pairs("sj_chain", pairs, detail=f"n={n} l={l}", **meta)
