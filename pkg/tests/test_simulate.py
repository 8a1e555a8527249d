"""Monte Carlo oracle: determinism, substreams, closed-form agreement."""

import math

import numpy as np
import pytest

from sgpv import (
    DesignConfig,
    PriorOdds,
    SimConfig,
    fdr_sgpv,
    prob_null,
    simulate_outcomes,
    simulate_reliability,
)
from sgpv.errors import InvalidConfig
from sgpv.simulate import _uniform_lanes

FIG5 = DesignConfig(0.0, 0.5, 16.0, 1.0, 0.05)


def three_se(p, replicates):
    return 3.0 * math.sqrt(p * (1.0 - p) / replicates)


class TestSubstreams:
    def test_lane_blocks_are_position_independent(self):
        whole = _uniform_lanes(42, 0, 100)
        tail = _uniform_lanes(42, 60, 40)
        assert np.array_equal(whole[60:], tail)

    def test_different_seeds_differ(self):
        assert not np.array_equal(_uniform_lanes(1, 0, 10), _uniform_lanes(2, 0, 10))


class TestDeterminism:
    def test_same_seed_same_counts(self):
        cfg = SimConfig(FIG5, 0.25, 20000, 314159)
        assert simulate_outcomes(cfg).counts == simulate_outcomes(cfg).counts

    @pytest.mark.parametrize("chunks", [2, 3, 7, 64])
    def test_chunking_is_invisible(self, chunks):
        cfg = SimConfig(FIG5, 0.25, 10007, 271828)
        assert simulate_outcomes(cfg).counts == simulate_outcomes(cfg, chunks=chunks).counts

    def test_reliability_chunking_is_invisible(self):
        cfg = SimConfig(FIG5, 0.0, 10007, 99991)
        base = simulate_reliability(cfg, PriorOdds(1.0), 1.0)
        split = simulate_reliability(cfg, PriorOdds(1.0), 1.0, chunks=5)
        assert base == split

    def test_seed_changes_counts(self):
        a = simulate_outcomes(SimConfig(FIG5, 0.25, 20000, 1))
        b = simulate_outcomes(SimConfig(FIG5, 0.25, 20000, 2))
        assert a.counts != b.counts


class TestOutcomeAgreement:
    def test_classical_alpha_recovery_at_zero_delta(self):
        design = DesignConfig(0.0, 0.0, 25.0, 1.0, 0.05)
        result = simulate_outcomes(SimConfig(design, 0.0, 100_000, 8675309))
        assert abs(result.empirical.p_alt - 0.05) <= three_se(0.05, 100_000)
        assert result.empirical.p_null == 0.0

    def test_nesting_probability_matches_closed_form(self):
        design = DesignConfig(0.0, 1.0, 16.0, 1.0, 0.05)
        result = simulate_outcomes(SimConfig(design, 0.0, 100_000, 24601))
        closed = prob_null(0.0, design)
        assert closed == pytest.approx(0.9586, abs=1e-4)
        assert abs(result.empirical.p_null - closed) <= three_se(closed, 100_000)

    def test_counts_and_empirical_are_consistent(self):
        cfg = SimConfig(FIG5, 0.3, 5000, 7)
        result = simulate_outcomes(cfg)
        assert sum(result.counts) == cfg.replicates
        assert result.empirical.p_alt == result.counts[0] / cfg.replicates
        assert result.empirical.p_null == result.counts[1] / cfg.replicates

    def test_gate_closed_design_never_nests(self):
        design = DesignConfig(0.0, 0.5, 5.0, 1.0, 0.05)
        result = simulate_outcomes(SimConfig(design, 0.0, 30_000, 5))
        assert result.counts[1] == 0


class TestReliabilityAgreement:
    def test_symmetric_truth_gives_prior(self):
        # theta1 == theta0 makes every discovery a coin flip over the truth
        design = DesignConfig(0.0, 0.0, 16.0, 1.0, 0.05)
        cfg = SimConfig(design, 0.0, 100_000, 13)
        rel = simulate_reliability(cfg, PriorOdds(1.0), 0.0)
        assert rel.n_discoveries > 0
        se = 3.0 * math.sqrt(0.25 / rel.n_discoveries)
        assert abs(rel.empirical_fdr - 0.5) <= se

    def test_figure5_fdr_matches_bayes_formula(self):
        cfg = SimConfig(FIG5, 0.0, 100_000, 4242)
        rel = simulate_reliability(cfg, PriorOdds(1.0), 1.0)
        closed = fdr_sgpv(1.0, FIG5, PriorOdds(1.0))
        se = 3.0 * math.sqrt(closed * (1.0 - closed) / rel.n_discoveries)
        assert abs(rel.empirical_fdr - closed) <= se

    def test_large_odds_far_alternative_drives_fdr_down(self):
        cfg = SimConfig(FIG5, 0.0, 50_000, 6174)
        rel = simulate_reliability(cfg, PriorOdds(50.0), 2.0)
        assert rel.empirical_fdr is not None
        assert rel.empirical_fdr < 1e-3

    def test_absent_rates_when_events_never_happen(self):
        # a design whose discovery probability is astronomically small
        design = DesignConfig(0.0, 3.0, 64.0, 1.0, 0.05)
        cfg = SimConfig(design, 0.0, 2000, 1001)
        rel = simulate_reliability(cfg, PriorOdds(0.001), 0.0)
        assert rel.empirical_fdr is None
        # and confirmations are impossible below the nesting gate
        small = DesignConfig(0.0, 0.5, 5.0, 1.0, 0.05)
        rel2 = simulate_reliability(SimConfig(small, 0.0, 2000, 3), PriorOdds(1.0), 1.0)
        assert rel2.empirical_fcr is None
        assert rel2.n_confirmations == 0


class TestValidation:
    def test_rejects_zero_replicates(self):
        with pytest.raises(InvalidConfig):
            SimConfig(FIG5, 0.0, 0, 1)

    def test_rejects_bad_seed(self):
        with pytest.raises(InvalidConfig):
            SimConfig(FIG5, 0.0, 10, -1)
        with pytest.raises(InvalidConfig):
            SimConfig(FIG5, 0.0, 10, 2**64)

    def test_rejects_zero_chunks(self):
        with pytest.raises(InvalidConfig):
            simulate_outcomes(SimConfig(FIG5, 0.0, 10, 1), chunks=0)
