"""
validators/suite.py
Seeded verification suite. Every trial draws its own series from a sub-seed
derived from (seed, trial), runs the selected check groups and returns the
reports in trial order.
"""
import hashlib
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

from lif_toolkit.algebra import series as ps
from lif_toolkit.algebra.series import TruncatedSeries
from lif_toolkit.errors import PreconditionViolated
from lif_toolkit.validators import checks as chk
from lif_toolkit.validators.checks import VerifyReport

logger = logging.getLogger(__name__)

NUMERATOR_RANGE = (-9, 9)
DENOMINATOR_RANGE = (1, 4)
MIN_SUITE_ORDER = 4

MAX_POWER_RULE_K = 6
LEMMA1_GRID = 12
INDUCTION_MAX_N = 10
EQ1_MAX_L = 5
EQ1_ORDER = 12


# ── Random series ─────────────────────────────────────────────────────────────

def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(*NUMERATOR_RANGE), rng.randint(*DENOMINATOR_RANGE))


def random_series(rng: random.Random, truncation: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(random_rational(rng) for _ in range(truncation + 1)))


def random_unit(rng: random.Random, truncation: int) -> TruncatedSeries:
    """g_0 != 0, enforced by rejection."""
    while True:
        g = random_series(rng, truncation)
        if g.coeffs[0]:
            return g


def random_nonunit(rng: random.Random, truncation: int) -> TruncatedSeries:
    g = random_series(rng, truncation)
    return TruncatedSeries((Fraction(0),) + g.coeffs[1:])


def random_almost_unit(rng: random.Random, truncation: int) -> TruncatedSeries:
    """f_0 = 0 and f_1 != 0 (so phi_0 = 1/f_1 != 0), enforced by rejection."""
    while True:
        f = random_nonunit(rng, truncation)
        if f.coeffs[1]:
            return f


def corrupt(f: TruncatedSeries, index: int, delta: Fraction = Fraction(1)) -> TruncatedSeries:
    """Negative control: f with one coefficient bumped by delta."""
    if delta == 0:
        raise PreconditionViolated("a corruption needs a nonzero delta")
    coeffs = list(f.coeffs)
    coeffs[index] = ps.coeff(f, index) + delta
    return TruncatedSeries(tuple(coeffs))


def trial_seed(seed: int, trial: int) -> int:
    """First 8 bytes of sha256("seed:trial"), so one trial can be replayed alone."""
    digest = hashlib.sha256(f"{seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# ── Trial context ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Trial:
    index: int
    seed: int
    order: int
    f: TruncatedSeries
    fbar: TruncatedSeries
    g: TruncatedSeries
    h: TruncatedSeries
    unit: TruncatedSeries
    k: int

    @property
    def meta(self) -> dict:
        return {"seed": self.seed, "trial": self.index}


def make_trial(seed: int, index: int, order: int, fault_index: Optional[int] = None) -> Trial:
    sub_seed = trial_seed(seed, index)
    rng = random.Random(sub_seed)
    f = random_almost_unit(rng, order)
    fbar = ps.comp_inverse(f)
    if fault_index is not None:
        fbar = corrupt(fbar, fault_index)
    return Trial(
        index=index,
        seed=sub_seed,
        order=order,
        f=f,
        fbar=fbar,
        g=random_series(rng, order),
        h=random_nonunit(rng, order),
        unit=random_unit(rng, order),
        k=rng.randint(0, MAX_POWER_RULE_K),
    )


# ── Check groups ──────────────────────────────────────────────────────────────

def _theorem1(t: Trial) -> List[VerifyReport]:
    return [chk.check_functional_form(t.g, t.f, fbar=t.fbar, **t.meta)]


def _theorem2(t: Trial) -> List[VerifyReport]:
    return [chk.check_schur_jabotinsky_form(t.f, fbar=t.fbar, **t.meta)]


def _linkage(t: Trial) -> List[VerifyReport]:
    return [chk.check_linkage(t.g, t.f, **t.meta)]


def _lemma1(t: Trial) -> List[VerifyReport]:
    size = min(LEMMA1_GRID, t.order - 1)
    return [chk.check_lemma1_grid(t.unit, size=size, **t.meta)]


def _calculus(t: Trial) -> List[VerifyReport]:
    return [
        chk.check_product_rule(t.f, t.g, **t.meta),
        chk.check_power_rule(t.g, t.k, **t.meta),
        chk.check_chain_rule(t.g, t.h, **t.meta),
        chk.check_term_by_term(t.g, t.h, **t.meta),
        chk.check_right_distributive(t.g, t.unit, t.h, **t.meta),
    ]


def _arithmetic(t: Trial) -> List[VerifyReport]:
    return [
        chk.check_mul_inverse(t.unit, **t.meta),
        chk.check_divide_roundtrip(t.g, t.f, **t.meta),
    ]


def _base_case(t: Trial) -> List[VerifyReport]:
    return [chk.check_base_case(t.g, t.f, fbar=t.fbar, **t.meta)]


def _induction(t: Trial) -> List[VerifyReport]:
    top = min(INDUCTION_MAX_N, t.order - 1)
    return [
        chk.check_induction_step(t.f, n, l, fbar=t.fbar, **t.meta)
        for n in range(1, top + 1)
        for l in range(n + 1)
    ]


def _eq1(t: Trial) -> List[VerifyReport]:
    order = min(EQ1_ORDER, t.order)
    f = ps.truncate(t.f, order)
    fbar = ps.truncate(t.fbar, order)
    reports = []
    for l in range(1, min(EQ1_MAX_L, order) + 1):
        reports.append(chk.check_eq1(f, l, order, fbar=fbar, **t.meta))
        reports.append(chk.check_backshifted_eq1(f, l, order, fbar=fbar, **t.meta))
    return reports


def _sj_chain(t: Trial) -> List[VerifyReport]:
    top = min(INDUCTION_MAX_N, t.order - 1)
    return [
        chk.check_sj_chain(t.f, n, l, fbar=t.fbar, **t.meta)
        for n in range(2, top + 1)
        for l in range(1, n)
    ]


def _inverse(t: Trial) -> List[VerifyReport]:
    return [chk.check_inverse_roundtrip(t.f, fbar=t.fbar, **t.meta)]


def _phi(t: Trial) -> List[VerifyReport]:
    return [chk.check_phi_agreement(t.f, **t.meta)]


@dataclass(frozen=True)
class CheckGroup:
    run: Callable[[Trial], List[VerifyReport]]
    max_trials: Optional[int] = None


CHECK_GROUPS: Dict[str, CheckGroup] = {
    "theorem1":   CheckGroup(_theorem1),
    "theorem2":   CheckGroup(_theorem2),
    "linkage":    CheckGroup(_linkage),
    "lemma1":     CheckGroup(_lemma1, max_trials=20),
    "calculus":   CheckGroup(_calculus),
    "arithmetic": CheckGroup(_arithmetic),
    "base_case":  CheckGroup(_base_case),
    "induction":  CheckGroup(_induction, max_trials=10),
    "eq1":        CheckGroup(_eq1, max_trials=10),
    "sj_chain":   CheckGroup(_sj_chain, max_trials=10),
    "inverse":    CheckGroup(_inverse),
    "phi":        CheckGroup(_phi),
}


def resolve_groups(names: Optional[Iterable[str]]) -> List[str]:
    if not names:
        return list(CHECK_GROUPS)
    selected = []
    for name in names:
        if name not in CHECK_GROUPS:
            raise PreconditionViolated(
                f"unknown check group {name!r}; choose from {', '.join(CHECK_GROUPS)}"
            )
        if name not in selected:
            selected.append(name)
    return [name for name in CHECK_GROUPS if name in selected]


def _run_trial(seed: int, index: int, order: int, groups: List[str], fault_index: Optional[int]) -> List[VerifyReport]:
    trial = make_trial(seed, index, order, fault_index)
    reports: List[VerifyReport] = []
    for name in groups:
        group = CHECK_GROUPS[name]
        if group.max_trials is not None and index >= group.max_trials:
            continue
        reports.extend(group.run(trial))
    failed = sum(1 for r in reports if not r.passed)
    logger.debug("trial %d (seed %d): %d reports, %d failed", index, trial.seed, len(reports), failed)
    return reports


def run_suite(
    seed: int,
    N: int,
    trials: int,
    checks: Optional[Iterable[str]] = None,
    workers: int = 1,
    fault_index: Optional[int] = None,
) -> List[VerifyReport]:
    """Run every selected check group on `trials` seeded random trials at truncation N.

    The result is deterministic in (seed, N, trials, checks, fault_index) and
    independent of `workers`.
    """
    if N < MIN_SUITE_ORDER:
        raise PreconditionViolated(f"suite order must be >= {MIN_SUITE_ORDER}, got {N}")
    if trials < 1:
        raise PreconditionViolated(f"trials must be >= 1, got {trials}")
    if workers < 1:
        raise PreconditionViolated(f"workers must be >= 1, got {workers}")
    if fault_index is not None and not 1 <= fault_index <= N:
        raise PreconditionViolated(f"fault index must lie in 1..{N}, got {fault_index}")
    groups = resolve_groups(checks)

    def _one(index: int) -> List[VerifyReport]:
        return _run_trial(seed, index, N, groups, fault_index)

    if workers == 1:
        per_trial = [_one(i) for i in range(trials)]
    else:
        with ThreadPoolExecutor(max_workers=min(workers, trials)) as ex:
            per_trial = list(ex.map(_one, range(trials)))

    reports = [r for batch in per_trial for r in batch]
    failed = sum(1 for r in reports if not r.passed)
    logger.info("suite seed=%d N=%d trials=%d: %d reports, %d failed", seed, N, trials, len(reports), failed)
    return reports
