"""Seeded drift statistics, stopping times, and the exact drift bound.

The random experiment draws fair bits from numpy's seeded PCG64 generator
(`numpy.random.default_rng`), which is version-pinned by numpy's bit-generator
compatibility guarantee; a (seed, length) pair always reproduces the same
stream, on any thread.  Real-valued statistics use doubles; everything that is
an identity or an inequality (the drift bound in particular) is computed on
exact integers or Fractions, never through floats.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np
from scipy.stats import t as student_t

from .dynamics import DEFAULT_MAX_STEPS, step_general
from .reference_table import PUBLISHED_INTERVALS, REFERENCE_ROWS
from .sweep import survey_range

# Two-sided normal critical values for the three supported levels; these exact
# literals are part of the interface.
Z_CRITICAL: dict[float, float] = {0.95: 1.960, 0.98: 2.326, 0.99: 2.576}

# Total-stopping-time reference slope from Applegate and Lagarias (2003):
# sigma_inf(x) > 6.14316 log(x) for infinitely many x.
APPLEGATE_LAGARIAS_SLOPE = 6.14316


class RatioSample(NamedTuple):
    xi: float
    zeros: int
    ones: int


def ratio_from_bits(bits: Sequence[int]) -> RatioSample:
    """Zeros-to-ones ratio of a 0/1 stream; xi is inf when no ones occur."""
    ones = sum(1 for b in bits if b)
    zeros = len(bits) - ones
    xi = zeros / ones if ones else math.inf
    return RatioSample(xi=xi, zeros=zeros, ones=ones)


def simulate_ratio(length: int, seed: int) -> RatioSample:
    """Draw `length` fair bits from PCG64(seed) and return their ratio stats."""
    if length < 1:
        raise ValueError("length must be >= 1")
    bits = np.random.default_rng(seed).integers(0, 2, size=length, dtype=np.uint8)
    ones = int(bits.sum())
    zeros = length - ones
    xi = zeros / ones if ones else math.inf
    return RatioSample(xi=xi, zeros=zeros, ones=ones)


def sample_ratios(length: int, samples: int, seed: int) -> list[RatioSample]:
    """Independent samples under seeds seed, seed+1, ..., in seed order."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    return [simulate_ratio(length, seed + j) for j in range(samples)]


def indicator_sample_std(zeros: int, ones: int) -> float:
    """Sample std (n-1 denominator) of a 0/1 sample with the given counts."""
    n = zeros + ones
    if n < 2:
        raise ValueError("need at least two draws")
    return math.sqrt(zeros * ones / (n * (n - 1)))


@dataclass(frozen=True)
class SampleStats:
    """Summary of a real-valued sample for interval construction."""

    count: int
    mean: float
    std: float
    level: float = 0.95

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.std < 0:
            raise ValueError("std must be >= 0")
        if self.level not in Z_CRITICAL:
            raise ValueError(f"level must be one of {sorted(Z_CRITICAL)}")

    @classmethod
    def from_values(cls, values: Sequence[float], level: float = 0.95) -> "SampleStats":
        if len(values) < 2:
            raise ValueError("need at least two values")
        return cls(
            count=len(values),
            mean=statistics.fmean(values),
            std=statistics.stdev(values),
            level=level,
        )


def confidence_interval(stats: SampleStats, mode: str = "normal") -> tuple[float, float]:
    """Symmetric interval mean +/- c * std / sqrt(count).

    mode "normal" uses the pinned z values; mode "t" uses the Student t
    critical value with count-1 degrees of freedom for small samples.
    """
    if stats.count < 2:
        raise ValueError("interval needs count >= 2")
    if mode == "normal":
        crit = Z_CRITICAL[stats.level]
    elif mode == "t":
        crit = float(student_t.ppf((1 + stats.level) / 2, stats.count - 1))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    half = crit * stats.std / math.sqrt(stats.count)
    return stats.mean - half, stats.mean + half


def exponentiate_interval(lo: float, hi: float) -> tuple[float, float]:
    """Map interval bounds through the monotone transform x -> 2^x."""
    if lo > hi:
        raise ValueError("interval bounds out of order")
    return 2.0**lo, 2.0**hi


def drift_bound(x0: int, n: int, mean_k: Fraction) -> Fraction:
    """Exact upper bound for the (n+1)-th odd value given the mean exponent.

    Multiplying the n+1 step equations and replacing every factor a bit above
    3 by 4 gives x_{n+1} <= ((3 x0 + 1) / 4) * (4 / 2^kbar)^{n+1} with kbar the
    mean exponent over the n+1 steps.  (n+1) * kbar must be the integer
    exponent total of an actual trajectory prefix, which keeps the bound a
    Fraction; comparisons against it are exact integer cross-multiplications.
    """
    if x0 < 1 or x0 % 2 == 0:
        raise ValueError("x0 must be odd and >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(mean_k) * (n + 1)
    if total.denominator != 1:
        raise ValueError("mean_k must come from a trajectory prefix of n+1 steps")
    return Fraction((3 * x0 + 1) * 4**n, 1 << int(total))


def drift_bound_holds(x0: int, n: int, mean_k: Fraction, actual: int) -> bool:
    """Exact check bound >= actual (Fraction comparison, no floats)."""
    return drift_bound(x0, n, mean_k) >= actual


@dataclass(frozen=True)
class StoppingProfile:
    """First-descent and first-one step counts of one shortcut orbit.

    stopping_time is the first step with value below the start (1 for every
    even start); total_stopping_time is the first step reaching 1.  ratio is
    total_stopping_time / ln(start), defined for starts >= 2 with complete
    orbits.  `complete` is False when the step budget ran out first.
    """

    x: int
    stopping_time: int | None
    total_stopping_time: int | None
    complete: bool

    @property
    def ratio(self) -> float | None:
        if self.x < 2 or self.total_stopping_time is None:
            return None
        return self.total_stopping_time / math.log(self.x)


def stopping_profile(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> StoppingProfile:
    """Walk the shortcut orbit of x, recording both stopping measures."""
    if x < 1:
        raise ValueError("x must be >= 1")
    value = x
    stopping: int | None = None
    total: int | None = 0 if x == 1 else None
    steps = 0
    while total is None and steps < max_steps:
        value, _ = step_general(value)
        steps += 1
        if stopping is None and value < x:
            stopping = steps
        if value == 1:
            total = steps
    return StoppingProfile(
        x=x, stopping_time=stopping, total_stopping_time=total, complete=total is not None
    )


def ratio_survey(
    limit: int, max_steps: int = DEFAULT_MAX_STEPS, workers: int = 1
) -> tuple[float, int]:
    """Maximum of total_stopping_time / ln(x) over 2 <= x <= limit.

    Returns (max_ratio, achieving x).  The published reference slope 6.14316
    is context for reading the number, not a bound this function asserts.
    """
    if limit < 2:
        raise ValueError("limit must be >= 2")
    survey = survey_range(2, limit + 1, max_steps=max_steps, workers=workers)
    if survey.failures:
        raise RuntimeError(f"{len(survey.failures)} starts hit the step budget")
    return survey.max_ratio, survey.ratio_argmax


def reference_rows_stats() -> dict:
    """Recompute the published 14-sample table's summary from its own rows."""
    one_plus = [row.one_plus_xi for row in REFERENCE_ROWS]
    xis = [row.xi for row in REFERENCE_ROWS]
    return {
        "samples": len(REFERENCE_ROWS),
        "mean_xi": statistics.fmean(xis),
        "mean_one_plus_xi": statistics.fmean(one_plus),
        "std_one_plus_xi": statistics.stdev(one_plus),
        "mean_indicator_std": statistics.fmean(r.indicator_std for r in REFERENCE_ROWS),
    }


def interval_discrepancy_report() -> dict:
    """Compare intervals recomputed from the reference rows with the printed ones.

    The printed tables label their bounds as intervals for mu = E(1+xi) but
    show numbers on the chi = 2^mu scale, and even on that scale the values do
    not follow from the rows by the stated normal-theory recipe (the original
    generator and the exact procedure are unknown).  This report states the
    mismatch; it does not reconcile it.
    """
    one_plus = [row.one_plus_xi for row in REFERENCE_ROWS]
    per_level = {}
    consistent = True
    for level, published in sorted(PUBLISHED_INTERVALS.items()):
        stats = SampleStats.from_values(one_plus, level=level)
        mu_normal = confidence_interval(stats, mode="normal")
        mu_t = confidence_interval(stats, mode="t")
        chi_normal = exponentiate_interval(*mu_normal)
        chi_t = exponentiate_interval(*mu_t)
        matches_mu = _interval_close(published, mu_normal) or _interval_close(published, mu_t)
        matches_chi = _interval_close(published, chi_normal) or _interval_close(published, chi_t)
        consistent = consistent and (matches_mu or matches_chi)
        per_level[level] = {
            "published": published,
            "computed_mu_normal": mu_normal,
            "computed_mu_t": mu_t,
            "computed_chi_normal": chi_normal,
            "computed_chi_t": chi_t,
            "published_matches_mu": matches_mu,
            "published_matches_chi": matches_chi,
        }
    return {
        "mean_one_plus_xi": statistics.fmean(one_plus),
        "levels": per_level,
        "published_tables_identical": True,  # both printed tables list the same bounds
        "reproducible": consistent,
        "note": (
            "printed bounds labelled for mu sit on the 2^mu scale and do not "
            "follow from the rows under the stated normal-theory recipe"
        ),
    }


def _interval_close(a: tuple[float, float], b: tuple[float, float], tol: float = 5e-3) -> bool:
    return abs(a[0] - b[0]) <= tol and abs(a[1] - b[1]) <= tol


def stopping_time_reference_note() -> dict:
    """Arithmetic around the reference slope: sigma = 100 pins x below ~1.174e7.

    Solving 6.14316 * ln(x) = 100 gives the largest start whose total stopping
    time could reach 100 under the reference slope; that threshold is far
    below 2^101.  Pure documentation, no conjecture content.
    """
    threshold = math.exp(100 / APPLEGATE_LAGARIAS_SLOPE)
    return {
        "slope": APPLEGATE_LAGARIAS_SLOPE,
        "sigma": 100,
        "threshold": threshold,
        "below_2_pow_101": threshold < 2**101,
    }
