"""Vectorized range surveys of shortcut trajectories.

The engine walks every start in [lo, hi) to the value 1, tallying total
stopping times, the ratio total/ln(start), and the largest excursion.  Work is
done in uint64 numpy chunks; any element whose value approaches the 64-bit
multiply limit is finished with exact Python ints, so results never depend on
the fast path staying in range.  Chunks are independent, and reports merge
associatively with value-based tie-breaks, so the outcome is identical for any
worker count or chunk size.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dynamics import DEFAULT_MAX_STEPS

# Largest value for which 3*x + 1 still fits in uint64.
UINT64_SAFE_MAX = (2**64 - 2) // 3

DEFAULT_CHUNK_SIZE = 1 << 20


@dataclass(frozen=True)
class RangeSurvey:
    """Aggregated outcome of walking every start in [lo, hi) to 1."""

    lo: int
    hi: int
    verified: int
    failures: tuple[int, ...]
    max_total_stopping_time: int | None
    tst_argmax: int | None
    max_ratio: float | None
    ratio_argmax: int | None
    peak: int | None

    def merge(self, other: "RangeSurvey") -> "RangeSurvey":
        """Combine two disjoint surveys; ties resolve to the smaller start."""
        tst, tst_arg = _merge_max(
            (self.max_total_stopping_time, self.tst_argmax),
            (other.max_total_stopping_time, other.tst_argmax),
        )
        ratio, ratio_arg = _merge_max(
            (self.max_ratio, self.ratio_argmax), (other.max_ratio, other.ratio_argmax)
        )
        peaks = [p for p in (self.peak, other.peak) if p is not None]
        return RangeSurvey(
            lo=min(self.lo, other.lo),
            hi=max(self.hi, other.hi),
            verified=self.verified + other.verified,
            failures=tuple(sorted(self.failures + other.failures)),
            max_total_stopping_time=tst,
            tst_argmax=tst_arg,
            max_ratio=ratio,
            ratio_argmax=ratio_arg,
            peak=max(peaks) if peaks else None,
        )


def _merge_max(a: tuple, b: tuple) -> tuple:
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if b[0] > a[0] or (b[0] == a[0] and b[1] < a[1]):
        return b
    return a


def _empty_survey(lo: int, hi: int) -> RangeSurvey:
    return RangeSurvey(lo, hi, 0, (), None, None, None, None, None)


class _Tracker:
    """Mutable accumulator for one chunk."""

    def __init__(self, lo: int, hi: int) -> None:
        self.lo, self.hi = lo, hi
        self.verified = 0
        self.failures: list[int] = []
        self.max_tst: int | None = None
        self.tst_arg: int | None = None
        self.max_ratio: float | None = None
        self.ratio_arg: int | None = None
        self.peak: int | None = hi - 1 if hi > lo else None

    def see_value(self, value: int) -> None:
        if self.peak is None or value > self.peak:
            self.peak = value

    def finish(self, start: int, steps: int) -> None:
        self.verified += 1
        if self.max_tst is None or steps > self.max_tst or (
            steps == self.max_tst and start < self.tst_arg
        ):
            self.max_tst, self.tst_arg = steps, start
        if start >= 2:
            ratio = steps / math.log(start)
            if self.max_ratio is None or ratio > self.max_ratio or (
                ratio == self.max_ratio and start < self.ratio_arg
            ):
                self.max_ratio, self.ratio_arg = ratio, start

    def result(self) -> RangeSurvey:
        return RangeSurvey(
            lo=self.lo,
            hi=self.hi,
            verified=self.verified,
            failures=tuple(sorted(self.failures)),
            max_total_stopping_time=self.max_tst,
            tst_argmax=self.tst_arg,
            max_ratio=self.max_ratio,
            ratio_argmax=self.ratio_arg,
            peak=self.peak,
        )


def _finish_exact(tracker: _Tracker, value: int, start: int, steps: int, max_steps: int) -> None:
    """Walk one element to 1 with Python ints (no overflow possible)."""
    while value != 1 and steps < max_steps:
        value = value // 2 if value % 2 == 0 else (3 * value + 1) // 2
        steps += 1
        tracker.see_value(value)
    if value == 1:
        tracker.finish(start, steps)
    else:
        tracker.failures.append(start)


def survey_chunk_python(lo: int, hi: int, max_steps: int = DEFAULT_MAX_STEPS) -> RangeSurvey:
    """Reference implementation: exact per-element walk, no numpy."""
    tracker = _Tracker(lo, hi)
    for start in range(lo, hi):
        _finish_exact(tracker, start, start, 0, max_steps)
    return tracker.result()


def survey_chunk_numpy(
    lo: int,
    hi: int,
    max_steps: int = DEFAULT_MAX_STEPS,
    overflow_limit: int = UINT64_SAFE_MAX,
) -> RangeSurvey:
    """Vectorized walk of [lo, hi) to 1 with exact fallback near the word limit."""
    if hi <= lo:
        return _empty_survey(lo, hi)
    tracker = _Tracker(lo, hi)
    one = np.uint64(1)
    three = np.uint64(3)
    vals = np.arange(lo, hi, dtype=np.uint64)
    starts = vals.copy()
    at_one = vals == one
    if at_one.any():
        for s in starts[at_one]:
            tracker.finish(int(s), 0)
        keep = ~at_one
        vals, starts = vals[keep], starts[keep]
    t = 0
    while vals.size and t < max_steps:
        high = vals > np.uint64(overflow_limit)
        if high.any():
            for v, s in zip(vals[high], starts[high]):
                _finish_exact(tracker, int(v), int(s), t, max_steps)
            keep = ~high
            vals, starts = vals[keep], starts[keep]
            if not vals.size:
                break
        t += 1
        odd = (vals & one).astype(bool)
        vals = np.where(odd, (three * vals + one) >> one, vals >> one)
        tracker.see_value(int(vals.max()))
        reached = vals == one
        if reached.any():
            finished = starts[reached]
            n = finished.size
            tracker.verified += n
            small = int(finished.min())
            if tracker.max_tst is None or t > tracker.max_tst or (
                t == tracker.max_tst and small < tracker.tst_arg
            ):
                tracker.max_tst, tracker.tst_arg = t, small
            eligible = finished[finished >= 2]
            if eligible.size:
                ratios = t / np.log(eligible.astype(np.float64))
                i = int(np.argmax(ratios))
                ratio, arg = float(ratios[i]), int(eligible[i])
                if tracker.max_ratio is None or ratio > tracker.max_ratio or (
                    ratio == tracker.max_ratio and arg < tracker.ratio_arg
                ):
                    tracker.max_ratio, tracker.ratio_arg = ratio, arg
            keep = ~reached
            vals, starts = vals[keep], starts[keep]
    tracker.failures.extend(int(s) for s in starts)
    return tracker.result()


def _chunk_worker(args: tuple) -> RangeSurvey:
    lo, hi, max_steps, engine = args
    if engine == "python":
        return survey_chunk_python(lo, hi, max_steps)
    return survey_chunk_numpy(lo, hi, max_steps)


def survey_range(
    lo: int,
    hi: int,
    max_steps: int = DEFAULT_MAX_STEPS,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    engine: str = "numpy",
) -> RangeSurvey:
    """Survey [lo, hi), optionally across worker processes.

    The chunk grid depends only on (lo, hi, chunk_size) and merging folds the
    chunks in range order, so the result is byte-for-byte identical for every
    worker count.
    """
    if lo < 1:
        raise ValueError("range must start at 1 or above")
    if hi <= lo:
        return _empty_survey(lo, hi)
    if engine not in ("numpy", "python"):
        raise ValueError(f"unknown engine {engine!r}")
    if chunk_size < 1:
        raise ValueError("chunk_size must be >= 1")
    chunks = [
        (start, min(start + chunk_size, hi), max_steps, engine)
        for start in range(lo, hi, chunk_size)
    ]
    if workers <= 1 or len(chunks) == 1:
        parts = [_chunk_worker(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_worker, chunks))
    result = parts[0]
    for part in parts[1:]:
        result = result.merge(part)
    return result
