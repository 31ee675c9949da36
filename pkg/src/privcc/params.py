"""Derived privacy constants and their feasibility checks.

All logarithms in the derived constants are natural logarithms; this is a
deliberate reading and it changes the numbers, so it is stated here once
and applies everywhere below.

The degree threshold t1 is taken as the maximum of the individual lower
bounds computed by t1_lower_bounds; each bound is reported separately so a
caller can see which constraint binds.  The optional n_hint adds the
approximation-regime bound, which grows with the graph size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

DEFAULT_BETA = 0.8 / 36
DEFAULT_LAMBDA = 0.8 / 36
DEFAULT_BETA_PRIME = 0.1
DEFAULT_LAMBDA_PRIME = 0.1

EPSILON_AGR_DIVISOR = 5.8
DELTA_AGR_DIVISOR = 9.6

# Regime in which the constant-factor approximation analysis applies:
# 5*beta + 2*lambda < 1/1.1.  The same condition guarantees that sparsified
# components have hop-diameter at most 4.
APPROX_REGIME_BOUND = 1.0 / 1.1


class ParameterError(ValueError):
    """A privacy-parameter combination violates an admissibility constraint."""


@dataclass(frozen=True)
class PrivacyParams:
    """Validated privacy configuration plus every derived constant.

    noise_multiplier scales every Laplace parameter (1 = faithful privacy;
    anything else is a testing mode and must be flagged NON-PRIVATE), and
    t0_override replaces the derived degree threshold the same way.
    """
    epsilon: float
    delta: float
    beta: float
    lambda_: float
    beta_prime: float
    lambda_prime: float
    epsilon_agr: float
    delta_agr: float
    gamma: float
    t1: float
    t0: float
    noise_multiplier: float = 1.0
    t0_override: float | None = None
    n_hint: int | None = None
    t1_bounds: tuple = field(default=())

    @property
    def non_private(self) -> bool:
        return self.noise_multiplier != 1.0 or self.t0_override is not None

    @property
    def t0_effective(self) -> float:
        return self.t0 if self.t0_override is None else float(self.t0_override)

    def step_epsilon(self, step: str) -> float:
        """Per-step privacy guarantee used by the auditor."""
        return {"noised-degree": self.epsilon / 4,
                "agreement": 2.9 * self.epsilon_agr,
                "lightness": self.epsilon / 4}[step]

    def step_delta(self, step: str) -> float:
        return {"noised-degree": 0.0,
                "agreement": 2.4 * self.delta_agr,
                "lightness": 0.0}[step]

    def as_dict(self) -> dict:
        return {
            "epsilon": self.epsilon, "delta": self.delta,
            "beta": self.beta, "lambda": self.lambda_,
            "beta_prime": self.beta_prime, "lambda_prime": self.lambda_prime,
            "epsilon_agr": self.epsilon_agr, "delta_agr": self.delta_agr,
            "gamma": self.gamma, "t1": self.t1, "t0": self.t0,
            "t0_effective": self.t0_effective,
            "noise_multiplier": self.noise_multiplier,
            "t0_override": self.t0_override,
            "n_hint": self.n_hint,
            "non_private": self.non_private,
            "t1_bounds": {label: value for label, value in self.t1_bounds},
        }


def _gamma(epsilon_agr: float, delta_agr: float) -> float:
    return (math.sqrt(4 * epsilon_agr / math.log(1 / delta_agr) + 1) + 1) \
        / math.sqrt(2)


def t1_lower_bounds(epsilon: float, delta: float, beta: float, lambda_: float,
                    beta_prime: float, lambda_prime: float,
                    n_hint: int | None = None) -> list[tuple[str, float]]:
    """Every lower bound on t1, as (label, value) pairs.

    Bounds 1-8 protect the privacy analysis; the n-hint bound additionally
    enables the constant-factor approximation guarantee and is included
    only when a graph size is supplied.
    """
    eps_agr = epsilon / EPSILON_AGR_DIVISOR
    dlt_agr = delta / DELTA_AGR_DIVISOR
    gamma = _gamma(eps_agr, dlt_agr)
    ln_inv_dagr = math.log(1 / dlt_agr)

    slack1 = (1 - beta - beta_prime) / (2 - beta - beta_prime) \
        - lambda_ - lambda_prime
    if slack1 <= 0:
        raise ParameterError(
            "infeasible: common-neighbor bound (1) requires "
            "lambda + lambda' < (1-beta-beta')/(2-beta-beta'), got slack "
            f"{slack1:.6g}")
    slack2 = 1 - beta - beta_prime - 2 * (lambda_ + lambda_prime)
    if slack2 <= 0:
        raise ParameterError(
            "infeasible: heavy-light bound (2) requires "
            "beta + beta' + 2(lambda + lambda') < 1, got slack "
            f"{slack2:.6g}")
    if 1 - beta - beta_prime <= 0:
        raise ParameterError("infeasible: beta + beta' must be below 1")

    bounds = [
        ("1-common-neighbors", 1.5 / slack1),
        ("2-heavy-light", 4.0 / (slack2 * (2 - beta - beta_prime))),
        ("3-agreement-tail", math.log(4 / delta) / beta_prime),
        ("4-agreement-tail-sqrt",
         (math.log(4 / delta) * gamma / (eps_agr * beta_prime)) ** 2
         * ln_inv_dagr),
        ("5-lightness-tail",
         8 * math.log(16 / delta) / (lambda_prime * epsilon)),
        ("6-neighbor-lightness",
         1.6 * math.log(32 / (delta * lambda_prime
                              * (1 - beta - beta_prime) * epsilon))
         * 8 / (lambda_prime * (1 - beta - beta_prime) * epsilon)),
        ("7-neighbor-agreement",
         1.6 * math.log(4 / (delta * beta_prime)) / beta_prime),
    ]
    a_coef = eps_agr * beta_prime / (gamma * math.sqrt(ln_inv_dagr))
    bounds.append((
        "8-neighbor-agreement-sqrt",
        (2.8 * (1 + math.log(2 / (math.sqrt(delta) * a_coef))) / a_coef) ** 2,
    ))
    if n_hint is not None:
        if n_hint < 2:
            raise ParameterError("n_hint must be at least 2")
        ln_n = math.log(n_hint)
        c = math.sqrt(4 * eps_agr + 1) + 1
        t_prime = max(
            400 * ln_n / (lambda_ * epsilon),
            2500 * c ** 2 * ln_n ** 2 * math.log(1 / delta)
            / (beta ** 2 * eps_agr ** 2),
        )
        bounds.append((
            "9-approximation",
            t_prime + 40 * ln_n / epsilon - 8 * math.log(16 / delta) / epsilon,
        ))
    return bounds


def derive(epsilon: float, delta: float,
           beta: float = DEFAULT_BETA, lambda_: float = DEFAULT_LAMBDA,
           beta_prime: float = DEFAULT_BETA_PRIME,
           lambda_prime: float = DEFAULT_LAMBDA_PRIME,
           noise_multiplier: float = 1.0,
           t0_override: float | None = None,
           n_hint: int | None = None) -> PrivacyParams:
    """Validate inputs and populate every derived constant."""
    if not epsilon > 0:
        raise ParameterError("epsilon must be positive")
    if not 0 < delta < 0.5:
        raise ParameterError("delta must lie in (0, 1/2)")
    if not 0 < beta <= 0.2:
        raise ParameterError("beta must lie in (0, 0.2]")
    if not 0 < lambda_ <= 0.2:
        raise ParameterError("lambda must lie in (0, 0.2]")
    if not beta_prime > 0:
        raise ParameterError("beta' must be positive")
    if not lambda_prime > 0:
        raise ParameterError("lambda' must be positive")
    if noise_multiplier < 0:
        raise ParameterError("noise multiplier must be nonnegative")

    eps_agr = epsilon / EPSILON_AGR_DIVISOR
    dlt_agr = delta / DELTA_AGR_DIVISOR
    gamma = _gamma(eps_agr, dlt_agr)
    bounds = t1_lower_bounds(epsilon, delta, beta, lambda_,
                             beta_prime, lambda_prime, n_hint)
    t1 = max(value for _, value in bounds)
    t0 = t1 + 8 * math.log(16 / delta) / epsilon
    return PrivacyParams(
        epsilon=epsilon, delta=delta, beta=beta, lambda_=lambda_,
        beta_prime=beta_prime, lambda_prime=lambda_prime,
        epsilon_agr=eps_agr, delta_agr=dlt_agr, gamma=gamma,
        t1=t1, t0=t0, noise_multiplier=noise_multiplier,
        t0_override=t0_override, n_hint=n_hint,
        t1_bounds=tuple(bounds),
    )


def validate_approx_regime(beta: float, lambda_: float):
    """Check 5*beta + 2*lambda < 1/1.1; returns (ok, slack)."""
    if beta < 0 or lambda_ < 0:
        raise ParameterError("beta and lambda must be nonnegative")
    margin = APPROX_REGIME_BOUND - (5 * beta + 2 * lambda_)
    return margin > 0, margin
