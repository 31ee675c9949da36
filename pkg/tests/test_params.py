import math

import numpy as np
import pytest

from privcc.params import (ParameterError, derive, t1_lower_bounds,
                           validate_approx_regime)


class TestDerive:
    def test_division_constants(self):
        p = derive(5.8, 0.48)
        assert p.epsilon_agr == pytest.approx(1.0)
        assert p.delta_agr == pytest.approx(0.05)

    def test_delta_out_of_range(self):
        with pytest.raises(ParameterError, match="delta"):
            derive(5.8, 0.96)

    @pytest.mark.parametrize("kwargs", [
        {"epsilon": 0.0, "delta": 0.1},
        {"epsilon": 1.0, "delta": 0.0},
        {"epsilon": 1.0, "delta": 0.1, "beta": 0.25},
        {"epsilon": 1.0, "delta": 0.1, "lambda_": 0.3},
        {"epsilon": 1.0, "delta": 0.1, "beta_prime": 0.0},
        {"epsilon": 1.0, "delta": 0.1, "noise_multiplier": -0.5},
    ])
    def test_validation_errors(self, kwargs):
        with pytest.raises(ParameterError):
            derive(**kwargs)

    def test_gamma_quadratic_identity(self):
        rng = np.random.default_rng(606)
        for _ in range(1000):
            eps = float(rng.uniform(0.01, 10.0))
            dlt = float(10 ** rng.uniform(-9, math.log10(0.4)))
            p = derive(eps, dlt)
            lhs = (math.sqrt(2) * p.epsilon_agr / p.gamma
                   + 2 * p.epsilon_agr ** 2
                   / (p.gamma ** 2 * math.log(1 / p.delta_agr)))
            assert abs(lhs - p.epsilon_agr) / p.epsilon_agr <= 1e-9
            assert p.gamma >= math.sqrt(2) - 1e-12

    def test_threshold_margin(self):
        p = derive(0.5, 0.05)
        margin = 8 * math.log(16 / 0.05) / 0.5
        assert p.t0 - p.t1 == pytest.approx(margin, rel=1e-9)

    def test_override_flags_non_private(self):
        assert not derive(1.0, 0.1).non_private
        assert derive(1.0, 0.1, noise_multiplier=0.5).non_private
        p = derive(1.0, 0.1, t0_override=3.0)
        assert p.non_private and p.t0_effective == 3.0

    def test_t1_is_max_of_bounds(self):
        p = derive(1.0, 0.1)
        assert p.t1 == max(v for _, v in p.t1_bounds)

    def test_step_guarantees(self):
        p = derive(2.0, 0.2)
        assert p.step_epsilon("noised-degree") == pytest.approx(0.5)
        assert p.step_epsilon("agreement") == pytest.approx(2.9 * 2.0 / 5.8)
        assert p.step_delta("agreement") == pytest.approx(2.4 * 0.2 / 9.6)
        assert p.step_delta("lightness") == 0.0


class TestT1Bounds:
    def test_common_neighbor_bound_closed_form(self):
        bounds = dict(t1_lower_bounds(1.0, 0.1, 0.1, 0.1, 0.1, 0.1))
        expected = 1.5 / ((1 - 0.2) / (2 - 0.2) - 0.2)
        assert bounds["1-common-neighbors"] == pytest.approx(expected)
        assert expected == pytest.approx(6.136, abs=1e-3)

    def test_agreement_tail_bound_closed_form(self):
        bounds = dict(t1_lower_bounds(1.0, 0.1, 0.02, 0.02, 0.1, 0.1))
        assert bounds["3-agreement-tail"] == pytest.approx(
            math.log(40) / 0.1)

    def test_infeasible_combination_names_inequality(self):
        # lambda + lambda' >= (1-beta-beta')/(2-beta-beta')
        with pytest.raises(ParameterError, match=r"\(1\)"):
            t1_lower_bounds(1.0, 0.1, 0.2, 0.2, 0.1, 0.25)

    def test_n_hint_bound_closed_form(self):
        eps, dlt, beta, lam = 1.0, 0.1, 0.05, 0.05
        n = 5000
        bounds = dict(t1_lower_bounds(eps, dlt, beta, lam, 0.1, 0.1,
                                      n_hint=n))
        eps_agr = eps / 5.8
        c = math.sqrt(4 * eps_agr + 1) + 1
        t_prime = max(400 * math.log(n) / (lam * eps),
                      2500 * c ** 2 * math.log(n) ** 2 * math.log(1 / dlt)
                      / (beta ** 2 * eps_agr ** 2))
        expected = t_prime + 40 * math.log(n) / eps \
            - 8 * math.log(16 / dlt) / eps
        assert bounds["9-approximation"] == pytest.approx(expected)

    def test_monotone_in_epsilon_and_delta(self):
        t1_eps = [derive(e, 0.05).t1 for e in (0.25, 0.5, 1.0, 2.0, 4.0)]
        assert all(b <= a for a, b in zip(t1_eps, t1_eps[1:]))
        t1_dlt = [derive(1.0, d).t1 for d in (0.001, 0.01, 0.1, 0.4)]
        assert all(b <= a for a, b in zip(t1_dlt, t1_dlt[1:]))


class TestApproxRegime:
    def test_default_constants_admissible(self):
        ok, margin = validate_approx_regime(0.8 / 36, 0.8 / 36)
        assert ok and margin == pytest.approx(1 / 1.1 - 7 * 0.8 / 36)

    def test_boundary_violation(self):
        ok, margin = validate_approx_regime(0.2, 0.0)
        assert not ok and margin < 0

    def test_near_boundary_ok(self):
        ok, _ = validate_approx_regime(0.0, 0.45)
        assert ok
