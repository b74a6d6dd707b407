"""collatzlab: a computational laboratory for shortcut 3n+1 dynamics.

Exact trajectory arithmetic and identities, residue-class half-split tallies,
an+b generalizations with cycle certification, vectorized range sweeps, and
seeded drift statistics, all behind one CLI (see `collatzlab.cli`).
"""

from .dynamics import (
    DEFAULT_MAX_STEPS,
    AnbParams,
    ParityExponents,
    StepKind,
    Termination,
    Trajectory,
    classify_counts,
    exponent_bookkeeping_report,
    odd_steps_extended,
    step_anb,
    step_general,
    step_odd,
    trajectory_general,
    trajectory_odd,
    two_adic_valuation,
)
from .identities import (
    ClosedFormCheck,
    GeometricSumCheck,
    ResidueClass,
    ShiftCheck,
    closed_form_check,
    geometric_tail_identity,
    heuristic_model,
    heuristic_model_prefix,
    heuristic_model_recursive,
    heuristic_tail_value,
    prefix_sum_offset_report,
    reconstruct_start,
    residue_shift_check,
)
from .halfsplit import (
    HalfSplitReport,
    ResourceLimitError,
    StepTally,
    SweepToOneResult,
    class_split,
    halfsplit_by_classes,
    halfsplit_verify,
    proof_case_table_check,
    step_kind_at,
    sweep_to_one,
)
from .anb import (
    CycleRecord,
    DivergenceDiagnostic,
    anb_general_step,
    anb_steps_extended,
    canonical_rotation,
    closed_form_anb_check,
    cycle_catalog,
    divergence_report,
    find_cycle,
    residue_shift_check_anb,
    trajectory_anb,
)
from .stats import (
    SampleStats,
    StoppingProfile,
    confidence_interval,
    drift_bound,
    drift_bound_holds,
    exponentiate_interval,
    indicator_sample_std,
    interval_discrepancy_report,
    ratio_from_bits,
    ratio_survey,
    sample_ratios,
    simulate_ratio,
    stopping_profile,
)
from .sweep import RangeSurvey, survey_range

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_STEPS",
    "AnbParams",
    "ParityExponents",
    "StepKind",
    "Termination",
    "Trajectory",
    "classify_counts",
    "exponent_bookkeeping_report",
    "odd_steps_extended",
    "step_anb",
    "step_general",
    "step_odd",
    "trajectory_general",
    "trajectory_odd",
    "two_adic_valuation",
    "ClosedFormCheck",
    "GeometricSumCheck",
    "ResidueClass",
    "ShiftCheck",
    "closed_form_check",
    "geometric_tail_identity",
    "heuristic_model",
    "heuristic_model_prefix",
    "heuristic_model_recursive",
    "heuristic_tail_value",
    "prefix_sum_offset_report",
    "reconstruct_start",
    "residue_shift_check",
    "HalfSplitReport",
    "ResourceLimitError",
    "StepTally",
    "SweepToOneResult",
    "class_split",
    "halfsplit_by_classes",
    "halfsplit_verify",
    "proof_case_table_check",
    "step_kind_at",
    "sweep_to_one",
    "CycleRecord",
    "DivergenceDiagnostic",
    "anb_general_step",
    "anb_steps_extended",
    "canonical_rotation",
    "closed_form_anb_check",
    "cycle_catalog",
    "divergence_report",
    "find_cycle",
    "residue_shift_check_anb",
    "trajectory_anb",
    "SampleStats",
    "StoppingProfile",
    "confidence_interval",
    "drift_bound",
    "drift_bound_holds",
    "exponentiate_interval",
    "indicator_sample_std",
    "interval_discrepancy_report",
    "ratio_from_bits",
    "ratio_survey",
    "sample_ratios",
    "simulate_ratio",
    "stopping_profile",
    "RangeSurvey",
    "survey_range",
]
