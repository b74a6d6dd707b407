import random

import pytest

from collatzlab.dynamics import StepKind
from collatzlab.halfsplit import (
    ResourceLimitError,
    StepTally,
    class_split,
    halfsplit_by_classes,
    halfsplit_verify,
    proof_case_table_check,
    step_kind_at,
    sweep_to_one,
)


class TestPaperRangeTables:
    def test_gamma2_step1_elements(self):
        # increases {1, 3}, decreases {2, 4}
        kinds = {x: step_kind_at(x, 1) for x in range(1, 5)}
        assert {x for x, k in kinds.items() if k is StepKind.INCREASE} == {1, 3}
        assert {x for x, k in kinds.items() if k is StepKind.DECREASE} == {2, 4}
        report = halfsplit_verify(2)
        assert report.tallies[0].increases == 2
        assert report.tallies[0].decreases == 2

    def test_gamma3_value_tables(self):
        # first and second step images of 1..8
        def image(x, steps):
            for _ in range(steps):
                x = x // 2 if x % 2 == 0 else (3 * x + 1) // 2
            return x

        assert [image(x, 1) for x in range(1, 9)] == [2, 1, 5, 2, 8, 3, 11, 4]
        assert [image(x, 2) for x in range(1, 9)] == [1, 2, 8, 1, 4, 5, 17, 2]

    def test_gamma3_step_splits(self):
        report = halfsplit_verify(3, steps=3)
        by_step = {t.step: t for t in report.tallies}
        assert (by_step[1].increases, by_step[1].decreases) == (4, 4)
        assert (by_step[2].increases, by_step[2].decreases) == (4, 4)
        # step 1: odd starts increase
        inc1 = {x for x in range(1, 9) if step_kind_at(x, 1) is StepKind.INCREASE}
        assert inc1 == {1, 3, 5, 7}
        # step 2: elements whose first image is odd
        inc2 = {x for x in range(1, 9) if step_kind_at(x, 2) is StepKind.INCREASE}
        assert inc2 == {2, 3, 6, 7}

    def test_gamma3_step3_outside_theorem(self):
        report = halfsplit_verify(3, steps=3)
        tail = report.tallies[-1]
        assert tail.step == 3
        assert not tail.within_theorem
        # happens to split evenly here; the guarantee (not the tally) stops
        assert (tail.increases, tail.decreases) == (4, 4)

    def test_gamma3_step4_split_actually_breaks(self):
        report = halfsplit_verify(3, steps=4)
        tail = report.tallies[-1]
        assert (tail.step, tail.within_theorem) == (4, False)
        assert (tail.increases, tail.decreases) == (2, 6)


class TestExactSplit:
    @pytest.mark.parametrize("M", range(2, 13))
    def test_full_range_exact(self, M):
        report = halfsplit_verify(M)
        assert report.covers_full_range
        half = 1 << (M - 1)
        for tally in report.tallies:
            assert tally.within_theorem
            assert (tally.increases, tally.decreases) == (half, half)
        assert report.exact_split()

    def test_full_range_exact_up_to_M18(self):
        # slower tail of the module invariant (M = 17, 18 direct)
        for M in (17, 18):
            report = halfsplit_verify(M)
            half = 1 << (M - 1)
            assert all(
                (t.increases, t.decreases) == (half, half) for t in report.tallies
            )

    def test_classes_mode_matches_direct(self):
        for M in range(2, 13):
            direct = halfsplit_verify(M)
            classes = halfsplit_by_classes(M)
            assert [
                (t.step, t.increases, t.decreases) for t in direct.tallies
            ] == [(t.step, t.increases, t.decreases) for t in classes.tallies]

    def test_classes_mode_via_verify(self):
        report = halfsplit_verify(14, method="classes")
        assert report.exact_split()

    def test_resource_limits(self):
        with pytest.raises(ResourceLimitError):
            halfsplit_verify(30)
        with pytest.raises(ResourceLimitError):
            halfsplit_by_classes(40)
        with pytest.raises(ValueError):
            halfsplit_by_classes(6, steps=6)  # beyond M-1 needs direct mode

    def test_bad_args(self):
        with pytest.raises(ValueError):
            halfsplit_verify(0)
        with pytest.raises(ValueError):
            halfsplit_verify(4, subrange=(0, 5))
        with pytest.raises(ValueError):
            halfsplit_verify(4, subrange=(3, 20))
        with pytest.raises(ValueError):
            halfsplit_verify(4, method="magic")
        with pytest.raises(ValueError):
            halfsplit_verify(4, subrange=(1, 8), method="classes")


class TestMerge:
    def test_two_halves(self):
        M = 6
        full = halfsplit_verify(M)
        lo = halfsplit_verify(M, subrange=(1, 32))
        hi = halfsplit_verify(M, subrange=(33, 64))
        merged = lo.merge(hi)
        assert merged.covers_full_range
        assert merged.tallies == full.tallies

    def test_random_four_way_partitions(self):
        M = 8
        full = halfsplit_verify(M)
        rng = random.Random(20240811)
        top = 1 << M
        for _ in range(12):
            cuts = sorted(rng.sample(range(2, top), 3))
            bounds = [1, *cuts, top + 1]
            parts = [
                halfsplit_verify(M, subrange=(bounds[j], bounds[j + 1] - 1))
                for j in range(4)
            ]
            merged = parts[0]
            for part in parts[1:]:
                merged = merged.merge(part)
            assert merged.covers_full_range
            assert merged.tallies == full.tallies
            assert merged.exact_split()

    def test_subrange_counts_sum(self):
        report = halfsplit_verify(5, subrange=(3, 17))
        for tally in report.tallies:
            assert tally.increases + tally.decreases == 15

    def test_merge_rejects_overlap(self):
        a = halfsplit_verify(4, subrange=(1, 8))
        b = halfsplit_verify(4, subrange=(8, 16))
        with pytest.raises(ValueError):
            a.merge(b)

    def test_merge_rejects_mismatched(self):
        a = halfsplit_verify(4, subrange=(1, 8))
        b = halfsplit_verify(5, subrange=(9, 16))
        with pytest.raises(ValueError):
            a.merge(b)

    def test_tally_addition_guard(self):
        t = StepTally(step=1, increases=1, decreases=2, within_theorem=True)
        with pytest.raises(ValueError):
            t + StepTally(step=2, increases=0, decreases=0, within_theorem=True)


class TestClassSplit:
    def test_step1_parity(self):
        split = dict((cls.residue, kind) for cls, kind in class_split(1, 4))
        assert split == {0: StepKind.DECREASE, 1: StepKind.INCREASE}

    def test_step2_classes(self):
        split = dict((cls.residue, kind) for cls, kind in class_split(2, 4))
        assert split == {
            0: StepKind.DECREASE,
            1: StepKind.DECREASE,
            2: StepKind.INCREASE,
            3: StepKind.INCREASE,
        }

    @pytest.mark.parametrize("n", range(1, 13))
    def test_cardinalities(self, n):
        kinds = [kind for _, kind in class_split(n, n + 1)]
        assert kinds.count(StepKind.INCREASE) == 1 << (n - 1)
        assert kinds.count(StepKind.DECREASE) == 1 << (n - 1)

    def test_class_determinism(self):
        # step-n direction depends only on x mod 2^n
        for n in range(1, 11):
            split = dict(
                (cls.residue, kind) for cls, kind in class_split(n, n + 1)
            )
            for x in range(1, 1 << 14, 97):
                assert step_kind_at(x, n) is split[x % (1 << n)]

    def test_matches_direct_elements(self):
        M, n = 7, 4
        split = dict((cls.residue, kind) for cls, kind in class_split(n, M))
        for x in range(1, (1 << M) + 1):
            assert step_kind_at(x, n) is split[x % (1 << n)]

    def test_bounds(self):
        with pytest.raises(ValueError):
            class_split(4, 4)
        with pytest.raises(ValueError):
            class_split(0, 4)


class TestProofCaseTable:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_no_mismatches(self, n):
        assert proof_case_table_check(n) == []


class TestSweepToOne:
    def test_limit_one(self):
        result = sweep_to_one(1)
        assert result.verified == 1
        assert result.failures == ()

    def test_small_range(self):
        result = sweep_to_one(10**4, max_steps=10**4)
        assert result.verified == 10**4
        assert result.failures == ()

    def test_step_budget_failures(self):
        result = sweep_to_one(30, max_steps=5)
        assert result.verified + len(result.failures) == 30
        assert 27 in result.failures
        assert 1 not in result.failures

    def test_bad_limit(self):
        with pytest.raises(ValueError):
            sweep_to_one(0)
