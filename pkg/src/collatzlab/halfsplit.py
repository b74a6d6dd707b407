"""Exact half-split tallies over the ranges {1, ..., 2^M}.

At every step n <= M-1, exactly half of the 2^M starts take an increase step
and half a decrease step.  This module verifies that by direct counting, by a
residue-class shortcut (the step-n direction of x depends only on x mod 2^n),
and exposes the per-class view.  Reports over disjoint subranges merge by
component-wise addition, which is what makes range-partitioned runs exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import DEFAULT_MAX_STEPS, StepKind
from .identities import ResidueClass
from .sweep import survey_range

# Caps keep a single call to the pure-Python walkers at roughly 10^8 steps.
DIRECT_ELEMENT_LIMIT = 1 << 21
CLASSES_MAX_STEP = 22


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds the per-call work budget."""


@dataclass(frozen=True)
class StepTally:
    """Counts of increase/decrease steps at one step index (1-based)."""

    step: int
    increases: int
    decreases: int
    within_theorem: bool

    def __add__(self, other: "StepTally") -> "StepTally":
        if (self.step, self.within_theorem) != (other.step, other.within_theorem):
            raise ValueError("cannot add tallies for different steps")
        return StepTally(
            step=self.step,
            increases=self.increases + other.increases,
            decreases=self.decreases + other.decreases,
            within_theorem=self.within_theorem,
        )


@dataclass(frozen=True)
class HalfSplitReport:
    """Per-step tallies over a union of disjoint intervals inside [1, 2^M].

    Steps beyond M-1 may be tallied too but are flagged as outside the range
    where the exact half split is guaranteed (the bound is sharp).
    """

    M: int
    intervals: tuple[tuple[int, int], ...]
    tallies: tuple[StepTally, ...]

    @property
    def element_count(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.intervals)

    @property
    def covers_full_range(self) -> bool:
        return self.intervals == ((1, 1 << self.M),)

    def merge(self, other: "HalfSplitReport") -> "HalfSplitReport":
        """Component-wise sum of two reports over disjoint subranges."""
        if self.M != other.M:
            raise ValueError("reports cover different ranges")
        if len(self.tallies) != len(other.tallies):
            raise ValueError("reports tally different step counts")
        merged = _normalize_intervals(self.intervals + other.intervals)
        return HalfSplitReport(
            M=self.M,
            intervals=merged,
            tallies=tuple(a + b for a, b in zip(self.tallies, other.tallies)),
        )

    def exact_split(self) -> bool:
        """True when every within-theorem tally splits the range exactly in half."""
        half, rem = divmod(self.element_count, 2)
        if rem:
            return False
        return all(
            t.increases == half and t.decreases == half
            for t in self.tallies
            if t.within_theorem
        )


def _normalize_intervals(
    intervals: tuple[tuple[int, int], ...]
) -> tuple[tuple[int, int], ...]:
    parts = sorted(intervals)
    out: list[tuple[int, int]] = []
    for lo, hi in parts:
        if out and lo <= out[-1][1]:
            raise ValueError("subranges overlap")
        if out and lo == out[-1][1] + 1:
            out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return tuple(out)


def halfsplit_verify(
    M: int,
    subrange: tuple[int, int] | None = None,
    steps: int | None = None,
    method: str = "direct",
) -> HalfSplitReport:
    """Tally step directions for the starts in [1, 2^M] (or a subrange of it).

    method "direct" walks every element and is the oracle; method "classes"
    walks one representative per residue class mod 2^n and multiplies by the
    class cardinality 2^(M-n), valid on the full range for steps n <= M-1.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    top = 1 << M
    if steps is None:
        steps = M - 1
    if steps < 0:
        raise ValueError("steps must be >= 0")
    if subrange is None:
        lo, hi = 1, top
    else:
        lo, hi = subrange
        if not 1 <= lo <= hi <= top:
            raise ValueError(f"subrange must sit inside [1, {top}]")
    if method == "direct":
        if hi - lo + 1 > DIRECT_ELEMENT_LIMIT:
            raise ResourceLimitError(
                f"direct tally over {hi - lo + 1} elements exceeds the budget of "
                f"{DIRECT_ELEMENT_LIMIT}; split the range into subranges of at most "
                f"{DIRECT_ELEMENT_LIMIT} elements and merge the reports, or use "
                "method='classes' for the full range"
            )
        return _halfsplit_direct(M, lo, hi, steps)
    if method == "classes":
        if subrange is not None and (lo, hi) != (1, top):
            raise ValueError("class-based tally is only valid on the full range")
        return halfsplit_by_classes(M, steps)
    raise ValueError(f"unknown method {method!r}")


def _halfsplit_direct(M: int, lo: int, hi: int, steps: int) -> HalfSplitReport:
    inc = [0] * (steps + 1)
    for x in range(lo, hi + 1):
        v = x
        for n in range(1, steps + 1):
            if v & 1:
                inc[n] += 1
                v = (3 * v + 1) >> 1
            else:
                v >>= 1
    count = hi - lo + 1
    tallies = tuple(
        StepTally(n, inc[n], count - inc[n], within_theorem=n <= M - 1)
        for n in range(1, steps + 1)
    )
    return HalfSplitReport(M=M, intervals=((lo, hi),), tallies=tallies)


def halfsplit_by_classes(M: int, steps: int | None = None) -> HalfSplitReport:
    """Full-range tally computed from one representative per residue class.

    The step-n direction of x depends only on x mod 2^n, so counting the odd
    (n-1)-step images of the 2^n representatives and scaling by 2^(M-n) gives
    the exact full-range tally without touching all 2^M elements.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if steps is None:
        steps = M - 1
    if steps > M - 1:
        raise ValueError(
            "class cardinalities are equal only for steps <= M-1; "
            "use the direct method for later steps"
        )
    if steps > CLASSES_MAX_STEP:
        raise ResourceLimitError(
            f"class tally for step {steps} walks 2^{steps} representatives; "
            f"the budget stops at step {CLASSES_MAX_STEP}"
        )
    tallies = []
    for n in range(1, steps + 1):
        scale = 1 << (M - n)
        inc_classes = sum(
            1 for cls, kind in class_split(n, M) if kind is StepKind.INCREASE
        )
        inc = inc_classes * scale
        tallies.append(
            StepTally(n, inc, (1 << M) - inc, within_theorem=True)
        )
    return HalfSplitReport(M=M, intervals=((1, 1 << M),), tallies=tuple(tallies))


def step_kind_at(x: int, n: int) -> StepKind:
    """Direction of step n (1-based) of the shortcut orbit of x."""
    if x < 1 or n < 1:
        raise ValueError("need x >= 1 and n >= 1")
    for _ in range(n - 1):
        x = x // 2 if x % 2 == 0 else (3 * x + 1) // 2
    return StepKind.INCREASE if x % 2 else StepKind.DECREASE


def class_split(n: int, M: int) -> list[tuple[ResidueClass, StepKind]]:
    """Step-n direction of every residue class mod 2^n inside [1, 2^M].

    The direction is the parity of the (n-1)-step image of the class
    representative (residue i, or 2^n for the zero class, which is the
    smallest member of that class in range).
    """
    if not 1 <= n <= M - 1:
        raise ValueError("need 1 <= n <= M-1")
    if n > CLASSES_MAX_STEP:
        raise ResourceLimitError(f"class split beyond step {CLASSES_MAX_STEP} exceeds budget")
    out = []
    for i in range(1 << n):
        rep = i if i else 1 << n
        out.append((ResidueClass(modulus_exponent=n, residue=i), step_kind_at(rep, n)))
    return out


def proof_case_table_check(n: int) -> list[dict]:
    """Empirically verify the parity case table behind the half-split argument.

    For each residue i mod 2^n, the two refinements i and i + 2^n mod 2^(n+1)
    must take opposite directions at step n+1, with the even-image class
    decreasing and the odd-image class increasing.  Returns the list of
    mismatches (expected empty); nothing is patched if the table disagrees.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    mismatches = []
    for i in range(1 << n):
        # The class arithmetic reads the residue image with T(0) = 0, so the
        # zero class contributes an even image even though its members do not
        # themselves reach 0.
        image_odd = bool(_iterate(i, n) % 2) if i else False
        lower = step_kind_at(i if i else 1 << (n + 1), n + 1)
        upper = step_kind_at(i + (1 << n), n + 1)
        want_lower = StepKind.INCREASE if image_odd else StepKind.DECREASE
        want_upper = StepKind.DECREASE if image_odd else StepKind.INCREASE
        if (lower, upper) != (want_lower, want_upper):
            mismatches.append(
                {"residue": i, "image_odd": image_odd, "lower": lower, "upper": upper}
            )
    return mismatches


def _iterate(x: int, n: int) -> int:
    for _ in range(n):
        x = x // 2 if x % 2 == 0 else (3 * x + 1) // 2
    return x


@dataclass(frozen=True)
class SweepToOneResult:
    verified: int
    failures: tuple[int, ...]


def sweep_to_one(
    limit: int,
    max_steps: int = DEFAULT_MAX_STEPS,
    workers: int = 1,
) -> SweepToOneResult:
    """Confirm that every 1 <= x <= limit reaches 1 within max_steps.

    Starts that hit the step budget are returned as failures, which is data
    (a rerun with a larger budget), not an error.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    survey = survey_range(1, limit + 1, max_steps=max_steps, workers=workers)
    return SweepToOneResult(verified=survey.verified, failures=survey.failures)
