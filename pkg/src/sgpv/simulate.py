"""Seeded Monte Carlo oracle for the closed-form design probabilities.

Each replicate owns one Philox counter block (four 64-bit lanes), so the
draw for replicate i is a pure function of (seed, i): results are
bitwise identical under any chunking of the replicate range, which is
what makes parallel schedules deterministic. Normal variates come from
inverse-transform through the package's own quantile, tying simulation
accuracy to the tested kernel.

Outcome runs consume lane 0 per replicate; reliability runs consume lane
0 for the truth draw and lane 1 for the variate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._normal import norm_quantile
from .core import NullSpec, Classification, second_gen_p
from .design import DesignConfig, OutcomeProbs
from .errors import InvalidConfig
from .intervals import ExtendedInterval
from .reliability import PriorOdds

_MIN_UNIFORM = 2.0**-64  # keep the inverse transform finite at u == 0


@dataclass(frozen=True)
class SimConfig:
    """One simulation run: a design, a data-generating truth, size, seed."""

    design: DesignConfig
    theta: float
    replicates: int
    seed: int

    def __post_init__(self) -> None:
        if self.replicates < 1:
            raise InvalidConfig(f"replicates must be >= 1, got {self.replicates!r}")
        if not 0 <= self.seed < 2**64:
            raise InvalidConfig(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")


@dataclass(frozen=True)
class SimResult:
    """Tri-state tallies with their empirical frequencies and binomial SEs."""

    counts: tuple[int, int, int]  # (n_alt, n_null, n_inconclusive)
    replicates: int
    empirical: OutcomeProbs
    se_alt: float
    se_null: float
    se_inconclusive: float

    @classmethod
    def from_counts(cls, counts: tuple[int, int, int], replicates: int) -> SimResult:
        empirical = OutcomeProbs(*(c / replicates for c in counts))
        ses = [
            math.sqrt(p * (1.0 - p) / replicates)
            for p in (empirical.p_alt, empirical.p_null, empirical.p_inconclusive)
        ]
        return cls(counts, replicates, empirical, *ses)


@dataclass(frozen=True)
class ReliabilitySimResult:
    """Empirical FDR/FCR; a rate is None when its conditioning event never occurred."""

    empirical_fdr: float | None
    empirical_fcr: float | None
    n_discoveries: int
    n_false_discoveries: int
    n_confirmations: int
    n_false_confirmations: int
    replicates: int


def _uniform_lanes(seed: int, start: int, count: int) -> np.ndarray:
    """(count, 4) uniform lanes for replicates [start, start + count)."""
    bit_gen = np.random.Philox(key=seed)
    if start:
        bit_gen.advance(start)  # one advance step == one 4-lane counter block
    lanes = np.random.Generator(bit_gen).random((count, 4))
    return np.maximum(lanes, _MIN_UNIFORM)


def _chunk_ranges(replicates: int, chunks: int) -> list[tuple[int, int]]:
    if chunks < 1:
        raise InvalidConfig(f"chunks must be >= 1, got {chunks!r}")
    size = -(-replicates // chunks)  # ceil
    return [
        (start, min(size, replicates - start))
        for start in range(0, replicates, size)
    ]


def _null_target(design: DesignConfig) -> NullSpec | ExtendedInterval:
    spec = design.null_spec()
    if spec is not None:
        return spec
    return ExtendedInterval(design.theta0, design.theta0)  # delta == 0: point null


def _classify_batch(
    theta_hats: np.ndarray, design: DesignConfig
) -> tuple[int, int, int]:
    half = design.z_crit * design.se
    target = _null_target(design)
    n_alt = n_null = n_inc = 0
    for theta_hat in theta_hats:
        res = second_gen_p(ExtendedInterval(theta_hat - half, theta_hat + half), target)
        if res.classification is Classification.ALTERNATIVE_COMPATIBLE:
            n_alt += 1
        elif res.classification is Classification.NULL_COMPATIBLE:
            n_null += 1
        else:
            n_inc += 1
    return n_alt, n_null, n_inc


def simulate_outcomes(cfg: SimConfig, chunks: int = 1) -> SimResult:
    """Empirical tri-state frequencies under theta_hat ~ N(theta, V / n).

    Per replicate: draw the estimate, form its (1 - alpha) z-interval,
    compute the second-generation p-value against the design's null
    interval, and tally the verdict. ``chunks`` only partitions the work;
    any value yields identical counts for the same seed.
    """
    design = cfg.design
    se = design.se
    totals = [0, 0, 0]
    for start, size in _chunk_ranges(cfg.replicates, chunks):
        u = _uniform_lanes(cfg.seed, start, size)[:, 0]
        theta_hats = cfg.theta + se * np.array([norm_quantile(v) for v in u])
        part = _classify_batch(theta_hats, design)
        totals = [t + p for t, p in zip(totals, part)]
    return SimResult.from_counts(tuple(totals), cfg.replicates)


def simulate_reliability(
    cfg: SimConfig, odds: PriorOdds, theta1: float, chunks: int = 1
) -> ReliabilitySimResult:
    """Empirical FDR and FCR with truth drawn at prior odds r.

    Per replicate: truth is the alternative theta1 with probability
    r / (1 + r), otherwise theta0; the estimate is then simulated and
    classified as in :func:`simulate_outcomes`. The FDR is the fraction
    of p_delta = 0 results whose truth was theta0, the FCR the fraction
    of p_delta = 1 results whose truth was theta1; either is None when no
    such results occurred.
    """
    design = cfg.design
    se = design.se
    half = design.z_crit * design.se
    target = _null_target(design)
    p_alt_truth = odds.r / (1.0 + odds.r)
    discoveries = false_discoveries = confirmations = false_confirmations = 0
    for start, size in _chunk_ranges(cfg.replicates, chunks):
        lanes = _uniform_lanes(cfg.seed, start, size)
        truth_is_alt = lanes[:, 0] < p_alt_truth
        means = np.where(truth_is_alt, theta1, design.theta0)
        theta_hats = means + se * np.array([norm_quantile(v) for v in lanes[:, 1]])
        for theta_hat, is_alt in zip(theta_hats, truth_is_alt):
            res = second_gen_p(
                ExtendedInterval(theta_hat - half, theta_hat + half), target
            )
            if res.classification is Classification.ALTERNATIVE_COMPATIBLE:
                discoveries += 1
                if not is_alt:
                    false_discoveries += 1
            elif res.classification is Classification.NULL_COMPATIBLE:
                confirmations += 1
                if is_alt:
                    false_confirmations += 1
    fdr = false_discoveries / discoveries if discoveries else None
    fcr = false_confirmations / confirmations if confirmations else None
    return ReliabilitySimResult(
        fdr,
        fcr,
        discoveries,
        false_discoveries,
        confirmations,
        false_confirmations,
        cfg.replicates,
    )
