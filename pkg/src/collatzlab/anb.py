"""Dynamics, cycles, and identities of the generalized odd maps x -> (ax+b)/2^k.

For odd a >= 3 and odd b >= 1 the odd-to-odd map is exact integer arithmetic,
and the closed-form identity and residue-class shift law carry over with 3
replaced by a.  Unlike the 3n+1 case these procedures settle into multi-member
cycles or keep growing; nothing here ever asserts divergence, only what
happened within a finite horizon.

With (a, b) = (3, 1) every function agrees exactly with its counterpart in
`dynamics`/`identities`; that agreement is enforced by tests, which is why the
implementations are deliberately separate code paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .dynamics import (
    DEFAULT_MAX_STEPS,
    AnbParams,
    ParityExponents,
    StepKind,
    Termination,
    Trajectory,
    step_anb,
)
from .identities import ShiftCheck

LABEL_BOUNDED = "bounded/cyclic within horizon"
LABEL_UNBOUNDED = "unbounded within horizon"


class ClosedFormAnbCheck(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def anb_general_step(x: int, params: AnbParams) -> tuple[int, StepKind]:
    """Shortcut form of the generalized map: x/2 on evens, (ax+b)/2 on odds."""
    if x < 1:
        raise ValueError(f"map is defined on integers >= 1, got {x}")
    if x % 2 == 0:
        return x // 2, StepKind.DECREASE
    return (params.a * x + params.b) // 2, StepKind.INCREASE


def anb_steps_extended(
    x0: int, params: AnbParams, count: int
) -> tuple[list[int], list[int]]:
    """Run exactly `count` generalized odd steps, continuing through repeats."""
    if count < 0:
        raise ValueError("count must be >= 0")
    values = [x0]
    exponents: list[int] = []
    for _ in range(count):
        nxt, k = step_anb(values[-1], params)
        values.append(nxt)
        exponents.append(k)
    return values, exponents


def trajectory_anb(
    x0: int, params: AnbParams, max_steps: int = DEFAULT_MAX_STEPS
) -> tuple[Trajectory, ParityExponents]:
    """Iterate the generalized odd map until a value repeats or max_steps pass.

    A repeat means the orbit has entered a cycle; the repeated value is not
    appended again, so `values` lists each visited odd number exactly once.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    seen = {x0}
    values = [x0]
    steps: list[StepKind] = []
    exponents: list[int] = []
    terminated = Termination.STEP_LIMIT
    while len(steps) < max_steps:
        nxt, k = step_anb(values[-1], params)
        if nxt in seen:
            terminated = Termination.REACHED_CYCLE
            break
        steps.append(StepKind.INCREASE if nxt > values[-1] else StepKind.DECREASE)
        values.append(nxt)
        exponents.append(k)
        seen.add(nxt)
    traj = Trajectory(
        start=x0, values=tuple(values), steps=tuple(steps), terminated=terminated
    )
    return traj, ParityExponents.from_exponents(exponents)


def canonical_rotation(members: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cycle so its smallest member comes first (dynamics preserved)."""
    if not members:
        raise ValueError("empty cycle")
    i = min(range(len(members)), key=members.__getitem__)
    return tuple(members[i:]) + tuple(members[:i])


@dataclass(frozen=True)
class CycleRecord:
    """A minimal cycle of a generalized odd map, stored in canonical rotation.

    members follow the map order starting from the smallest member, and
    exponents[j] is the power of two removed on the step members[j] ->
    members[(j+1) % len].  The cycle is certified by the product identity
    2^{sum k} * prod(members) == prod(a*member + b).
    """

    params: AnbParams
    members: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.members) != len(self.exponents):
            raise ValueError("need one exponent per cycle step")
        for j, x in enumerate(self.members):
            nxt, k = step_anb(x, self.params)
            if (nxt, k) != (self.members[(j + 1) % len(self.members)], self.exponents[j]):
                raise ValueError("members do not form a cycle of the map")
        if self.members[0] != min(self.members):
            raise ValueError("cycle must be stored in canonical rotation")

    @property
    def sum_exponents(self) -> int:
        return sum(self.exponents)

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def product_identity(self) -> tuple[int, int, bool]:
        """Both sides of the certifying product identity, computed afresh."""
        lhs = (1 << self.sum_exponents) * math.prod(self.members)
        rhs = math.prod(self.params.a * x + self.params.b for x in self.members)
        return lhs, rhs, lhs == rhs


def find_cycle(
    x0: int, params: AnbParams, max_steps: int = DEFAULT_MAX_STEPS
) -> CycleRecord | None:
    """Return the cycle the orbit of x0 enters within max_steps, if any.

    The full pre-period is kept in a value-to-index map, so the cycle is read
    off directly once a value repeats.  None means no repeat happened within
    the budget, which is inconclusive, not a proof of divergence.
    """
    index = {x0: 0}
    values = [x0]
    for _ in range(max_steps):
        nxt, _ = step_anb(values[-1], params)
        if nxt in index:
            cycle = canonical_rotation(values[index[nxt]:])
            exps = []
            for j, x in enumerate(cycle):
                y, k = step_anb(x, params)
                if y != cycle[(j + 1) % len(cycle)]:
                    raise AssertionError("cycle readback disagrees with the map")
                exps.append(k)
            return CycleRecord(params=params, members=cycle, exponents=tuple(exps))
        index[nxt] = len(values)
        values.append(nxt)
    return None


def closed_form_anb_check(
    x0: int,
    params: AnbParams,
    n: int,
    exponents: Sequence[int] | None = None,
) -> ClosedFormAnbCheck:
    """Check the generalized closed form after n odd steps.

    With v_r the exponent prefix sums, the n-th value y_n satisfies

        y_n * 2^{v_n} == a^n * x0 + b * sum_{r=1..n} a^{n-r} * 2^{v_{r-1}}.

    Left side from iteration, right side from the formula, both exact.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if exponents is not None and len(exponents) < n:
        raise ValueError(f"need at least {n} exponents, got {len(exponents)}")
    values, walked = anb_steps_extended(x0, params, n)
    if exponents is None:
        exponents = walked
    prefix = [0]
    for k in exponents[:n]:
        prefix.append(prefix[-1] + k)
    a, b = params.a, params.b
    lhs = values[n] * (1 << prefix[n])
    rhs = a**n * x0 + b * sum(a ** (n - r) * (1 << prefix[r - 1]) for r in range(1, n + 1))
    return ClosedFormAnbCheck(lhs=lhs, rhs=rhs, holds=lhs == rhs)


def _walk_anb_general_zero(x: int, steps: int, params: AnbParams) -> tuple[int, int]:
    """Iterate the generalized shortcut map with the local T(0) = 0 extension."""
    if x < 0:
        raise ValueError("walker defined for x >= 0")
    increases = 0
    for _ in range(steps):
        if x == 0:
            continue
        if x % 2 == 0:
            x //= 2
        else:
            x = (params.a * x + params.b) // 2
            increases += 1
    return x, increases


def residue_shift_check_anb(k: int, m: int, i: int, params: AnbParams) -> ShiftCheck:
    """Generalized residue shift: T^k(2^k m + i) == a^p m + T^k(i).

    p counts the increases among the k generalized shortcut steps taken from
    the residue i; both sides come from separate walks.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    if not 0 <= i < (1 << k):
        raise ValueError("need 0 <= i < 2^k")
    lhs, _ = _walk_anb_general_zero((1 << k) * m + i, k, params)
    ti, p = _walk_anb_general_zero(i, k, params)
    rhs = params.a**p * m + ti
    return ShiftCheck(holds=lhs == rhs, increase_count=p, lhs=lhs, rhs=rhs)


@dataclass(frozen=True)
class DivergenceDiagnostic:
    """Horizon-bounded growth summary of one generalized orbit.

    The exact fields are integers (steps, exponent total, peak, bit lengths);
    `expanding` compares a^steps against 2^{sum k} exactly, which is the sign
    of the mean log2 growth without touching floats.  The float `drift_log2`
    is display only.  No divergence claim is ever made: the label says what
    happened within the horizon and nothing more.
    """

    params: AnbParams
    start: int
    steps_taken: int
    peak: int
    sum_exponents: int
    label: str

    @property
    def expanding(self) -> bool:
        return self.params.a**self.steps_taken > (1 << self.sum_exponents)

    @property
    def peak_bits(self) -> int:
        return self.peak.bit_length()

    @property
    def start_bits(self) -> int:
        return self.start.bit_length()

    @property
    def drift_log2(self) -> float:
        if self.steps_taken == 0:
            return 0.0
        n = self.steps_taken
        return (n * math.log2(self.params.a) - self.sum_exponents) / n


def divergence_report(
    x0: int, params: AnbParams, horizon: int = DEFAULT_MAX_STEPS
) -> DivergenceDiagnostic:
    """Run the orbit for at most `horizon` steps and summarize its growth.

    Unlike `trajectory_anb`, the step that closes a cycle is counted here:
    its exponent is what balances the tally for cyclic orbits (around a full
    cycle 2^{sum k} always exceeds a^length, so cycles never read as
    expanding).
    """
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    seen = {x0}
    value = x0
    peak = x0
    steps = 0
    sum_k = 0
    label = LABEL_UNBOUNDED
    while steps < horizon:
        value, k = step_anb(value, params)
        steps += 1
        sum_k += k
        peak = max(peak, value)
        if value in seen:
            label = LABEL_BOUNDED
            break
        seen.add(value)
    return DivergenceDiagnostic(
        params=params,
        start=x0,
        steps_taken=steps,
        peak=peak,
        sum_exponents=sum_k,
        label=label,
    )


def cycle_catalog(
    params: AnbParams, start_limit: int, max_steps: int = 10**4
) -> tuple[CycleRecord, ...]:
    """All distinct cycles entered from odd starts up to start_limit.

    Deduplicated by canonical rotation and ordered by (length, members), so
    the catalog is deterministic for a given search budget.
    """
    if start_limit < 1:
        raise ValueError("start_limit must be >= 1")
    found: dict[tuple[int, ...], CycleRecord] = {}
    for x0 in range(1, start_limit + 1, 2):
        record = find_cycle(x0, params, max_steps=max_steps)
        if record is not None and record.members not in found:
            found[record.members] = record
    return tuple(sorted(found.values(), key=lambda r: (len(r.members), r.members)))
