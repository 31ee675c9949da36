import numpy as np
import pytest

from privcc.audit import (audit_mechanism, audit_step, clopper_pearson,
                          verify_adjacent)
from privcc.generators import matching_instance
from privcc.graph import SignedGraph
from privcc.params import ParameterError, derive


def adjacent_matching_pair(m=8, flip_at=0):
    tau = np.ones(m, dtype=np.int64)
    tau2 = tau.copy()
    tau2[flip_at] = 0
    return matching_instance(tau), matching_instance(tau2)


class TestPlumbing:
    def test_clopper_pearson_edges(self):
        lo, hi = clopper_pearson(0, 100, 0.05)
        assert lo == 0.0 and 0 < hi < 0.1
        lo, hi = clopper_pearson(100, 100, 0.05)
        assert hi == 1.0 and 0.9 < lo < 1.0
        lo, hi = clopper_pearson(50, 100, 0.05)
        assert lo < 0.5 < hi

    def test_verify_adjacent(self):
        g, g2 = adjacent_matching_pair()
        assert verify_adjacent(g, g2) == 1
        assert verify_adjacent(g, g) == 0
        far = matching_instance(np.zeros(8, dtype=np.int64))
        with pytest.raises(ValueError, match="differ"):
            verify_adjacent(g, far)
        with pytest.raises(ValueError, match="vertex set"):
            verify_adjacent(g, SignedGraph(3))

    def test_scaled_noise_refused(self):
        g, g2 = adjacent_matching_pair()
        params = derive(1.0, 0.1, noise_multiplier=0.0)
        with pytest.raises(ParameterError, match="faithful"):
            audit_step("noised-degree", g, g2, (0, 1), 100, 1, params)

    def test_unknown_step(self):
        g, g2 = adjacent_matching_pair()
        with pytest.raises(ValueError, match="unknown step"):
            audit_step("components", g, g2, 0, 100, 1, derive(1.0, 0.1))


class TestNoisedDegreeStep:
    def test_identical_graphs_concentrate_near_zero(self):
        g, _ = adjacent_matching_pair()
        params = derive(1.0, 0.1, t0_override=2.0)
        report = audit_step("noised-degree", g, g, (0, 1), 50_000, 3, params)
        assert abs(report.eps_upper) <= 0.1
        assert not report.flagged

    def test_honest_mechanism_within_bound(self):
        g, g2 = adjacent_matching_pair()
        params = derive(1.0, 0.1, t0_override=2.0)
        report = audit_step("noised-degree", g, g2, (0, 1), 50_000, 4, params,
                            slack=0.08)
        assert report.eps_theory == pytest.approx(0.25)
        assert report.passes and not report.flagged

    def test_halved_noise_flagged(self):
        g, g2 = adjacent_matching_pair()
        params = derive(1.0, 0.1, t0_override=2.0)
        report = audit_step("noised-degree", g, g2, (0, 1), 50_000, 5, params,
                            noise_scale_factor=0.5)
        assert report.flagged

    def test_single_vertex_event(self):
        g, g2 = adjacent_matching_pair()
        params = derive(1.0, 0.1, t0_override=2.0)
        report = audit_step("noised-degree", g, g2, 0, 50_000, 6, params)
        # one-coordinate event realizes half the pair-event loss
        assert report.eps_upper <= 0.125 + 0.05


class TestOtherSteps:
    def test_agreement_step_within_bound(self):
        g, g2 = adjacent_matching_pair()
        params = derive(1.0, 0.1)
        report = audit_step("agreement", g, g2, (0, 1), 50_000, 7, params)
        assert report.delta_step == pytest.approx(2.4 * 0.1 / 9.6)
        assert report.eps_upper <= report.eps_theory + report.slack

    def test_lightness_step_within_bound(self):
        g, g2 = adjacent_matching_pair()
        params = derive(1.0, 0.1)
        report = audit_step("lightness", g, g2, 0, 50_000, 8, params)
        assert report.eps_theory == pytest.approx(0.25)
        assert report.passes


class TestFalseAlarmControl:
    def test_tight_scalar_mechanism_rarely_flagged(self):
        eps_true = 1.0
        alarms = 0
        repeats = 60
        for r in range(repeats):
            report = audit_mechanism(
                lambda rng, k: 1.0 + rng.laplace(0, 1 / eps_true, k) >= 1.5,
                lambda rng, k: 0.0 + rng.laplace(0, 1 / eps_true, k) >= 1.5,
                eps_true, 0.0, 10_000, 100 + r, alpha=0.05)
            assert report.eps_lower <= report.eps_upper
            alarms += report.flagged
        bound = 0.05 * repeats + 3 * np.sqrt(repeats * 0.05 * 0.95)
        assert alarms <= bound

    def test_report_serializes(self):
        report = audit_mechanism(
            lambda rng, k: rng.random(k) < 0.5,
            lambda rng, k: rng.random(k) < 0.5,
            1.0, 0.0, 1000, 1)
        payload = report.as_dict()
        assert set(payload) >= {"step", "event", "p_hat", "q_hat",
                                "eps_upper", "eps_lower", "flagged",
                                "passes", "scope"}
