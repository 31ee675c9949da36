"""Differentially private correlation clustering by noised neighborhood
agreement, with a non-private reference algorithm, a bulk-synchronous
simulator with memory accounting, instance generators, an exact cost
oracle, and an empirical privacy auditor."""

from .audit import AuditReport, audit_mechanism, audit_step
from .cluster import Clustering, RunTrace, noised_agreement, run
from .cost import CostReport, brute_force_opt, cost
from .estimators import (MpcAgreementClustering, NoisedAgreementClustering,
                         ReferenceAgreementClustering)
from .generators import PlantedSpec, er_signed, matching_instance, planted
from .graph import (SignedGraph, as_signed_graph, closed_neighborhood,
                    dump_edge_list, load_edge_list, sym_diff_size)
from .mpc import (MpcStats, SampleFamily, build_samples, calibrate_a,
                  estimate_X, mpc_noised_agreement, simulate)
from .noise import NoiseKey, NoiseLedger, agreement_scale, laplace
from .params import (ParameterError, PrivacyParams, derive, t1_lower_bounds,
                     validate_approx_regime)
from .reference import AgreementVectors, alg_cc, alg_cc_prime

__version__ = "0.1.0"

__all__ = [
    "AgreementVectors", "AuditReport", "Clustering", "CostReport",
    "MpcAgreementClustering", "MpcStats", "NoiseKey", "NoiseLedger",
    "NoisedAgreementClustering", "ParameterError", "PlantedSpec",
    "PrivacyParams", "ReferenceAgreementClustering", "RunTrace",
    "SampleFamily", "SignedGraph", "agreement_scale", "alg_cc",
    "alg_cc_prime", "as_signed_graph", "audit_mechanism", "audit_step",
    "brute_force_opt", "build_samples", "calibrate_a", "closed_neighborhood",
    "cost", "derive", "dump_edge_list", "er_signed", "estimate_X",
    "laplace", "load_edge_list", "matching_instance", "mpc_noised_agreement",
    "noised_agreement", "planted", "run", "simulate", "sym_diff_size",
    "t1_lower_bounds", "validate_approx_regime",
]
