"""Second-generation p-values over interval estimates and interval nulls.

Library surface: extended-real interval arithmetic (:mod:`sgpv.intervals`),
the p-value itself with delta-gap ranking (:mod:`sgpv.core`), closed-form
design frequency properties (:mod:`sgpv.design`), false discovery and
confirmation rates (:mod:`sgpv.reliability`), batch screening
(:mod:`sgpv.screening`), and a seeded Monte Carlo oracle
(:mod:`sgpv.simulate`). The ``sgpv`` command line tool fronts all of it.
"""

from . import errors
from .core import (
    Classification,
    NullSpec,
    SgpvResult,
    classify,
    delta_gap,
    max_p_over_null,
    round_half_away,
    second_gen_p,
    traditional_p,
)
from .design import (
    DesignConfig,
    OutcomeProbs,
    PowerCurvePoint,
    correction_trigger_power,
    emit_power_curve,
    outcome_probs,
    power_curve_csv,
    prob_alt,
    prob_inconclusive,
    prob_null,
    required_interval_ratio,
    std_normal_cdf,
    std_normal_quantile,
)
from .intervals import ExtendedInterval, intersect, length, truncate, z_interval
from .reliability import (
    PriorOdds,
    ReliabilityPoint,
    classical_beta,
    classical_power,
    emit_reliability_curve,
    fcr_sgpv,
    fdr_sgpv,
    fdr_test,
    fnr_test,
    reliability_curve_csv,
)
from .screening import (
    FOLD_CHANGE_NULL,
    CrossTab,
    GroupSummary,
    ScreenReport,
    ScreenRow,
    ScreenSummary,
    StudyRow,
    TrackPoint,
    attach_adjustments,
    batch_sgpv,
    bh_qvalues,
    bonferroni_flags,
    cross_tab,
    log10_interval,
    pointwise_track,
    rank_findings,
    ranked_indices,
    two_sample_ci,
)
from .simulate import (
    ReliabilitySimResult,
    SimConfig,
    SimResult,
    simulate_outcomes,
    simulate_reliability,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "CrossTab",
    "DesignConfig",
    "ExtendedInterval",
    "FOLD_CHANGE_NULL",
    "GroupSummary",
    "NullSpec",
    "OutcomeProbs",
    "PowerCurvePoint",
    "PriorOdds",
    "ReliabilityPoint",
    "ReliabilitySimResult",
    "ScreenReport",
    "ScreenRow",
    "ScreenSummary",
    "SgpvResult",
    "SimConfig",
    "SimResult",
    "StudyRow",
    "TrackPoint",
    "attach_adjustments",
    "batch_sgpv",
    "bh_qvalues",
    "bonferroni_flags",
    "classical_beta",
    "classical_power",
    "classify",
    "correction_trigger_power",
    "cross_tab",
    "delta_gap",
    "emit_power_curve",
    "emit_reliability_curve",
    "errors",
    "fcr_sgpv",
    "fdr_sgpv",
    "fdr_test",
    "fnr_test",
    "intersect",
    "length",
    "log10_interval",
    "max_p_over_null",
    "outcome_probs",
    "pointwise_track",
    "power_curve_csv",
    "prob_alt",
    "prob_inconclusive",
    "prob_null",
    "rank_findings",
    "ranked_indices",
    "reliability_curve_csv",
    "required_interval_ratio",
    "round_half_away",
    "second_gen_p",
    "simulate_outcomes",
    "simulate_reliability",
    "std_normal_cdf",
    "std_normal_quantile",
    "traditional_p",
    "truncate",
    "two_sample_ci",
    "z_interval",
]
