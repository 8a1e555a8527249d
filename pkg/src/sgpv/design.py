"""Closed-form operating characteristics under a normal sampling model.

For an estimator with ``sqrt(n) * (theta_hat - theta) ~ N(0, V)``, the
(1 - alpha) z-interval either clears the null interval entirely
(p_delta = 0), nests inside it (p_delta = 1), or straddles a boundary
(inconclusive). With se = sqrt(V / n), z the upper alpha/2 normal
quantile, a = (theta0 - delta - theta) / se and b = (theta0 + delta -
theta) / se:

    P(p_delta = 0) = Phi(a - z) + Phi(-b - z)
    P(p_delta = 1) = Phi(b - z) - Phi(a + z)    if delta > z * se, else 0
    P(0 < p_delta < 1) = the complementary mass, evaluated directly

Nesting is geometrically impossible unless the interval estimate is
narrower than the null interval, hence the gate ``delta > z * se``; at
exact equality the nesting event has probability zero and the value is 0.

Note that V is the variance of the *scaled* estimator (the sqrt(n)
convention), so the standard error of theta_hat is sqrt(V / n), not
sqrt(V).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import _normal
from .core import NullSpec
from .errors import (
    InvalidInterval,
    InvalidProbability,
    InvalidProportion,
    InvalidScale,
    InvalidSeries,
)
from .intervals import ExtendedInterval

_PARTITION_TOL = 1e-10


def std_normal_cdf(x: float) -> float:
    """Standard normal CDF Phi(x), absolute error at the 1e-15 level."""
    return _normal.norm_cdf(x)


def std_normal_quantile(p: float) -> float:
    """Inverse standard normal CDF; raises InvalidProbability off (0, 1)."""
    return _normal.norm_quantile(p)


@dataclass(frozen=True)
class DesignConfig:
    """Design parameters for the normal model.

    delta may be zero only to recover classical point-null behavior;
    variance is V in the sqrt(n)-scaled convention (se = sqrt(V / n)).
    """

    theta0: float
    delta: float
    n: float
    variance: float
    alpha: float = 0.05

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta0):
            raise InvalidInterval("theta0 must be finite")
        if not (self.delta >= 0 and math.isfinite(self.delta)):
            raise InvalidInterval(f"delta must be >= 0, got {self.delta!r}")
        if not (self.n > 0 and math.isfinite(self.n)):
            raise InvalidScale(f"sample size must be positive, got {self.n!r}")
        if not (self.variance > 0 and math.isfinite(self.variance)):
            raise InvalidScale(f"variance must be positive, got {self.variance!r}")
        if not 0.0 < self.alpha < 1.0:
            raise InvalidProbability(f"alpha must be in (0, 1), got {self.alpha!r}")

    @property
    def se(self) -> float:
        return math.sqrt(self.variance / self.n)

    @property
    def z_crit(self) -> float:
        return _normal.norm_quantile(1.0 - 0.5 * self.alpha)

    @property
    def null_interval(self) -> ExtendedInterval:
        return ExtendedInterval(self.theta0 - self.delta, self.theta0 + self.delta)

    def null_spec(self) -> NullSpec | None:
        """NullSpec for this design, or None when delta == 0 (point null)."""
        if self.delta == 0:
            return None
        return NullSpec.symmetric(self.theta0, self.delta)


@dataclass(frozen=True)
class OutcomeProbs:
    """Probabilities of the three outcomes; they must partition unity."""

    p_alt: float
    p_null: float
    p_inconclusive: float

    def __post_init__(self) -> None:
        for name, p in (
            ("p_alt", self.p_alt),
            ("p_null", self.p_null),
            ("p_inconclusive", self.p_inconclusive),
        ):
            if math.isnan(p) or not 0.0 <= p <= 1.0:
                raise InvalidProportion(f"{name} must lie in [0, 1], got {p!r}")
        total = self.p_alt + self.p_null + self.p_inconclusive
        if abs(total - 1.0) > _PARTITION_TOL:
            raise InvalidProportion(
                f"outcome probabilities sum to {total!r}, not 1"
            )


def _cdf_diff(upper: float, lower: float) -> float:
    """Phi(upper) - Phi(lower) without cancellation in the upper tail."""
    if upper <= lower:
        return 0.0
    if upper + lower > 0.0:
        value = _normal.norm_cdf(-lower) - _normal.norm_cdf(-upper)
    else:
        value = _normal.norm_cdf(upper) - _normal.norm_cdf(lower)
    return max(0.0, value)


def _standardized_edges(theta: float, cfg: DesignConfig) -> tuple[float, float]:
    se = cfg.se
    a = (cfg.theta0 - cfg.delta - theta) / se
    b = (cfg.theta0 + cfg.delta - theta) / se
    return a, b


def prob_alt(theta: float, cfg: DesignConfig) -> float:
    """P(p_delta = 0 | theta): the interval estimate clears the null interval.

    Plays the role of power; inside the null interval it is the error
    rate, bounded above by alpha and vanishing with n in the interior.
    """
    a, b = _standardized_edges(theta, cfg)
    z = cfg.z_crit
    return _normal.norm_cdf(a - z) + _normal.norm_cdf(-b - z)


def prob_null(theta: float, cfg: DesignConfig) -> float:
    """P(p_delta = 1 | theta): the interval estimate nests inside the null.

    Exactly zero when delta <= z * se (including equality), where nesting
    is impossible.
    """
    z = cfg.z_crit
    if cfg.delta <= z * cfg.se:
        return 0.0
    a, b = _standardized_edges(theta, cfg)
    return _cdf_diff(b - z, a + z)


def prob_inconclusive(theta: float, cfg: DesignConfig) -> float:
    """P(0 < p_delta < 1 | theta): the interval straddles a null boundary."""
    a, b = _standardized_edges(theta, cfg)
    z = cfg.z_crit
    not_alt = _cdf_diff(b + z, a - z)  # 1 - prob_alt by tail symmetry
    if cfg.delta <= z * cfg.se:
        return min(1.0, not_alt)
    return max(0.0, not_alt - _cdf_diff(b - z, a + z))


def outcome_probs(theta: float, cfg: DesignConfig) -> OutcomeProbs:
    """Bundle the three outcome probabilities; they sum to one."""
    return OutcomeProbs(
        prob_alt(theta, cfg),
        prob_null(theta, cfg),
        prob_inconclusive(theta, cfg),
    )


def required_interval_ratio(alpha: float, power: float) -> float:
    """Width ratio |I| / |H0| implied by a two-sided design.

    For a design powered at ``power`` to detect the smallest meaningful
    effect, the interval estimate width relative to the null interval is
    z_{1-alpha/2} / (z_{1-alpha/2} + z_{power}): equal widths at 50%
    power, 0.7 at 80%, 0.6 at 90% (alpha = 0.05).
    """
    if not 0.0 < alpha < 1.0:
        raise InvalidProbability(f"alpha must be in (0, 1), got {alpha!r}")
    if not 0.0 < power < 1.0:
        raise InvalidProbability(f"power must be in (0, 1), got {power!r}")
    z_a = _normal.norm_quantile(1.0 - 0.5 * alpha)
    return z_a / (z_a + _normal.norm_quantile(power))


def correction_trigger_power(alpha: float) -> float:
    """Power below which the estimate grows wider than twice the null.

    Solves required_interval_ratio(alpha, power) = 2; about 16% at
    alpha = 0.05. Designs powered above this level never trigger the
    small-sample guard.
    """
    if not 0.0 < alpha < 1.0:
        raise InvalidProbability(f"alpha must be in (0, 1), got {alpha!r}")
    return _normal.norm_cdf(-0.5 * _normal.norm_quantile(1.0 - 0.5 * alpha))


@dataclass(frozen=True)
class PowerCurvePoint:
    theta: float
    p_alt: float
    p_null: float
    p_inconclusive: float


def emit_power_curve(
    cfg: DesignConfig, theta_grid: Sequence[float]
) -> list[PowerCurvePoint]:
    """Outcome probabilities over a grid of true hypotheses, in grid order."""
    if len(theta_grid) == 0:
        raise InvalidSeries("theta grid is empty")
    rows = []
    for theta in theta_grid:
        probs = outcome_probs(theta, cfg)
        rows.append(
            PowerCurvePoint(theta, probs.p_alt, probs.p_null, probs.p_inconclusive)
        )
    return rows


def power_curve_csv(rows: Sequence[PowerCurvePoint], digits: int = 6) -> str:
    """Serialize a power curve as CSV (header theta,p_alt,p_null,p_inconclusive)."""
    lines = ["theta,p_alt,p_null,p_inconclusive"]
    for row in rows:
        lines.append(
            ",".join(
                format(v, f".{digits}g")
                for v in (row.theta, row.p_alt, row.p_null, row.p_inconclusive)
            )
        )
    return "\n".join(lines) + "\n"
