"""Estimator-style front end so the clusterers compose with the scikit-learn
ecosystem (get_params/set_params, fit/fit_predict, labels_).

fit accepts a SignedGraph, a square symmetric 0/1 adjacency matrix (sparse
or dense), or an (n, edges) tuple; see graph.as_signed_graph.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from . import mpc
from .cluster import run
from .graph import as_signed_graph
from .params import (DEFAULT_BETA, DEFAULT_BETA_PRIME, DEFAULT_LAMBDA,
                     DEFAULT_LAMBDA_PRIME, derive)
from .reference import AgreementVectors, alg_cc, alg_cc_prime


def _resolve_seed(random_state) -> int:
    if random_state is None:
        return int(np.random.SeedSequence().entropy % (2 ** 63))
    return int(random_state)


class NoisedAgreementClustering(ClusterMixin, BaseEstimator):
    """Differentially private correlation clustering.

    After fit: labels_ (cluster id per vertex), singleton_light_,
    clustering_, trace_, params_, seed_.
    """

    def __init__(self, epsilon: float = 1.0, delta: float = 0.1,
                 beta: float = DEFAULT_BETA, lambda_: float = DEFAULT_LAMBDA,
                 beta_prime: float = DEFAULT_BETA_PRIME,
                 lambda_prime: float = DEFAULT_LAMBDA_PRIME,
                 noise_multiplier: float = 1.0,
                 t0_override: float | None = None,
                 n_hint: int | None = None,
                 random_state: int | None = None):
        self.epsilon = epsilon
        self.delta = delta
        self.beta = beta
        self.lambda_ = lambda_
        self.beta_prime = beta_prime
        self.lambda_prime = lambda_prime
        self.noise_multiplier = noise_multiplier
        self.t0_override = t0_override
        self.n_hint = n_hint
        self.random_state = random_state

    def fit(self, X, y=None):
        g = as_signed_graph(X)
        self.params_ = derive(
            self.epsilon, self.delta, self.beta, self.lambda_,
            self.beta_prime, self.lambda_prime,
            noise_multiplier=self.noise_multiplier,
            t0_override=self.t0_override, n_hint=self.n_hint)
        self.seed_ = _resolve_seed(self.random_state)
        clustering, trace = run(g, self.params_, self.seed_)
        self.clustering_ = clustering
        self.trace_ = trace
        self.labels_ = clustering.assignment.copy()
        self.singleton_light_ = clustering.singleton_light.copy()
        return self


class ReferenceAgreementClustering(ClusterMixin, BaseEstimator):
    """Non-private reference clusterer with constant or per-item thresholds.

    keep_light_singletons=False selects the variant that leaves light
    vertices inside their component's cluster.
    """

    def __init__(self, beta=DEFAULT_BETA, lambda_=DEFAULT_LAMBDA,
                 e_rem=(), default_beta: float = 0.0,
                 keep_light_singletons: bool = True):
        self.beta = beta
        self.lambda_ = lambda_
        self.e_rem = e_rem
        self.default_beta = default_beta
        self.keep_light_singletons = keep_light_singletons

    def fit(self, X, y=None):
        g = as_signed_graph(X)
        vectors = AgreementVectors(
            beta=self.beta, lambda_=self.lambda_,
            e_rem=frozenset(tuple(e) for e in self.e_rem),
            default_beta=self.default_beta)
        self.clustering_ = (alg_cc if self.keep_light_singletons
                            else alg_cc_prime)(g, vectors)
        self.labels_ = self.clustering_.assignment.copy()
        self.singleton_light_ = self.clustering_.singleton_light.copy()
        return self


class MpcAgreementClustering(ClusterMixin, BaseEstimator):
    """Clustering through the bulk-synchronous simulator.

    After fit: labels_, clustering_, stats_ (rounds, machines, memory),
    params_, seed_.
    """

    def __init__(self, epsilon: float = 1.0, delta: float = 0.1,
                 beta: float = DEFAULT_BETA, lambda_: float = DEFAULT_LAMBDA,
                 beta_prime: float = DEFAULT_BETA_PRIME,
                 lambda_prime: float = DEFAULT_LAMBDA_PRIME,
                 noise_multiplier: float = 1.0,
                 t0_override: float | None = None,
                 mu: float = 0.5,
                 sampling_constant: float = mpc.DEFAULT_SAMPLING_CONSTANT,
                 budget_slack: float = mpc.DEFAULT_BUDGET_SLACK,
                 random_state: int | None = None):
        self.epsilon = epsilon
        self.delta = delta
        self.beta = beta
        self.lambda_ = lambda_
        self.beta_prime = beta_prime
        self.lambda_prime = lambda_prime
        self.noise_multiplier = noise_multiplier
        self.t0_override = t0_override
        self.mu = mu
        self.sampling_constant = sampling_constant
        self.budget_slack = budget_slack
        self.random_state = random_state

    def fit(self, X, y=None):
        g = as_signed_graph(X)
        self.params_ = derive(
            self.epsilon, self.delta, self.beta, self.lambda_,
            self.beta_prime, self.lambda_prime,
            noise_multiplier=self.noise_multiplier,
            t0_override=self.t0_override)
        self.seed_ = _resolve_seed(self.random_state)
        clustering, stats = mpc.simulate(
            g, self.params_, self.mu, a=self.sampling_constant,
            seed=self.seed_, budget_slack=self.budget_slack)
        self.clustering_ = clustering
        self.stats_ = stats
        self.labels_ = clustering.assignment.copy()
        self.singleton_light_ = clustering.singleton_light.copy()
        return self
