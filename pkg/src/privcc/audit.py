"""Empirical privacy estimation for single pipeline steps.

The auditor runs one mechanism step many times on each of two adjacent
graphs, estimates the probability of a chosen event on both, and converts
Clopper-Pearson confidence bounds on those frequencies into bounds on the
realized privacy loss.  A violation is only flagged when the lower
confidence bound exceeds the step's theoretical guarantee, which keeps the
false-alarm rate at the configured confidence level.

Only single steps are audited.  The end-to-end guarantee rests on
composition plus a coupling argument over the final component computation,
both of which live at delta scales far beyond what frequency estimation
can certify; that scope limit is recorded in every report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import beta as beta_dist

from .cluster import run
from .graph import SignedGraph
from .noise import agreement_scale
from .params import ParameterError, PrivacyParams

SCOPE_NOTE = ("single-step audit; the end-to-end guarantee follows from "
              "composition and is not empirically certified here")

STEP_NOISED_DEGREE = "noised-degree"
STEP_AGREEMENT = "agreement"
STEP_LIGHTNESS = "lightness"
STEPS = (STEP_NOISED_DEGREE, STEP_AGREEMENT, STEP_LIGHTNESS)

EVENT_KINDS = {
    STEP_NOISED_DEGREE: "vertices-in-high-degree-set",
    STEP_AGREEMENT: "edge-in-agreement",
    STEP_LIGHTNESS: "vertex-light",
}


@dataclass(frozen=True)
class AuditReport:
    step: str
    event: str
    trials: int
    p_hat: float
    q_hat: float
    p_interval: tuple[float, float]
    q_interval: tuple[float, float]
    eps_upper: float
    eps_lower: float
    eps_theory: float
    delta_step: float
    alpha: float
    slack: float
    flagged: bool
    passes: bool
    scope: str = SCOPE_NOTE

    def as_dict(self) -> dict:
        return {
            "step": self.step, "event": self.event, "trials": self.trials,
            "p_hat": self.p_hat, "q_hat": self.q_hat,
            "p_interval": list(self.p_interval),
            "q_interval": list(self.q_interval),
            "eps_upper": self.eps_upper, "eps_lower": self.eps_lower,
            "eps_theory": self.eps_theory, "delta_step": self.delta_step,
            "alpha": self.alpha, "slack": self.slack,
            "flagged": self.flagged, "passes": self.passes,
            "scope": self.scope,
        }


def clopper_pearson(successes: int, trials: int,
                    alpha: float) -> tuple[float, float]:
    """Two-sided exact binomial confidence interval."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    lo = 0.0 if successes == 0 else \
        float(beta_dist.ppf(alpha / 2, successes, trials - successes + 1))
    hi = 1.0 if successes == trials else \
        float(beta_dist.ppf(1 - alpha / 2, successes + 1, trials - successes))
    return lo, hi


def _loss(numer: float, denom: float) -> float:
    if numer <= 0:
        return -math.inf
    if denom <= 0:
        return math.inf
    return math.log(numer / denom)


def audit_mechanism(sample_p, sample_q, eps_theory: float, delta_step: float,
                    trials: int, seed: int, alpha: float = 0.05,
                    slack: float = 0.05, step: str = "custom",
                    event: str = "custom") -> AuditReport:
    """Core estimator: sample_p/sample_q map an RNG to a bool event array."""
    rng_p = np.random.default_rng(np.random.SeedSequence([seed, 1]))
    rng_q = np.random.default_rng(np.random.SeedSequence([seed, 2]))
    hits_p = int(np.count_nonzero(sample_p(rng_p, trials)))
    hits_q = int(np.count_nonzero(sample_q(rng_q, trials)))
    p_hat, q_hat = hits_p / trials, hits_q / trials
    p_lo, p_hi = clopper_pearson(hits_p, trials, alpha)
    q_lo, q_hi = clopper_pearson(hits_q, trials, alpha)
    eps_upper = _loss(p_hi - delta_step, q_lo)
    eps_lower = _loss(p_lo - delta_step, q_hi)
    return AuditReport(
        step=step, event=event, trials=trials,
        p_hat=p_hat, q_hat=q_hat,
        p_interval=(p_lo, p_hi), q_interval=(q_lo, q_hi),
        eps_upper=eps_upper, eps_lower=eps_lower,
        eps_theory=eps_theory, delta_step=delta_step,
        alpha=alpha, slack=slack,
        flagged=eps_lower > eps_theory,
        passes=eps_upper <= eps_theory + slack,
    )


def verify_adjacent(g: SignedGraph, g_prime: SignedGraph) -> int:
    """Allow identical graphs (self-audit) or a single differing edge."""
    if g.n != g_prime.n:
        raise ValueError("adjacent graphs must share the vertex set")
    e1 = {tuple(e) for e in g.edge_array()}
    e2 = {tuple(e) for e in g_prime.edge_array()}
    diff = len(e1 ^ e2)
    if diff > 1:
        raise ValueError(
            f"graphs differ in {diff} edges; adjacency allows at most one")
    return diff


def audit_step(step: str, g: SignedGraph, g_prime: SignedGraph, target,
               trials: int, seed: int, params: PrivacyParams,
               alpha: float = 0.05, slack: float = 0.05,
               noise_scale_factor: float = 1.0) -> AuditReport:
    """Audit one mechanism step on an adjacent graph pair.

    target selects the event: one vertex or a pair of vertices for the
    noised-degree step (all must clear the threshold), an edge for the
    agreement step, one vertex for the lightness step.  State the step
    conditions on (the high-degree set, or the agreement statuses) is
    derived once from the shared seed, exactly as a replayed run would.
    noise_scale_factor deliberately misconfigures the audited step's noise
    and exists to validate that broken mechanisms get flagged.
    """
    if params.noise_multiplier != 1.0:
        raise ParameterError(
            "audits require faithful noise (noise multiplier 1); "
            "a scaled mechanism is not the private mechanism")
    if step not in STEPS:
        raise ValueError(f"unknown step {step!r}")
    verify_adjacent(g, g_prime)

    eps_theory = params.step_epsilon(step)
    delta_step = params.step_delta(step)
    vertex_scale = 8.0 / params.epsilon * noise_scale_factor

    if step == STEP_NOISED_DEGREE:
        verts = tuple(int(v) for v in np.atleast_1d(target))
        degs = np.array([[gg.degree(v) for v in verts]
                         for gg in (g, g_prime)], dtype=np.float64)
        threshold = params.t0_effective

        def sampler(side):
            def draw(rng, n_trials):
                noise = rng.laplace(0.0, vertex_scale,
                                    size=(n_trials, len(verts)))
                return np.all(degs[side] + noise >= threshold, axis=1)
            return draw

        event = f"{EVENT_KINDS[step]}:{','.join(map(str, verts))}"
        return audit_mechanism(sampler(0), sampler(1), eps_theory, delta_step,
                               trials, seed, alpha, slack, step, event)

    if step == STEP_AGREEMENT:
        u, v = (int(x) for x in target)
        stats = []
        for gg in (g, g_prime):
            d_u, d_v = gg.degree(u), gg.degree(v)
            stats.append((
                gg.sym_diff_size(u, v),
                agreement_scale(d_u, d_v, params) * noise_scale_factor,
                params.beta * max(d_u, d_v),
            ))

        def sampler(side):
            sym, scale, thresh = stats[side]

            def draw(rng, n_trials):
                return sym + rng.laplace(0.0, scale, n_trials) < thresh
            return draw

        event = f"{EVENT_KINDS[step]}:{u},{v}"
        return audit_mechanism(sampler(0), sampler(1), eps_theory, delta_step,
                               trials, seed, alpha, slack, step, event)

    # Lightness: agreement statuses fixed by replaying the shared-seed run.
    x = int(np.atleast_1d(target)[0])
    stats = []
    for gg in (g, g_prime):
        _, trace = run(gg, params, seed)
        stats.append((float(trace.removed_count[x]),
                      params.lambda_ * gg.degree(x)))

    def sampler(side):
        removed, thresh = stats[side]

        def draw(rng, n_trials):
            return removed + rng.laplace(0.0, vertex_scale,
                                         n_trials) > thresh
        return draw

    event = f"{EVENT_KINDS[step]}:{x}"
    return audit_mechanism(sampler(0), sampler(1), eps_theory, delta_step,
                           trials, seed, alpha, slack, step, event)
