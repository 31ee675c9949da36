"""Benchmark instance generators, all deterministic in their seed."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cluster import Clustering
from .graph import SignedGraph


@dataclass(frozen=True)
class PlantedSpec:
    k: int          # cluster count
    s: int          # cluster size
    flip_p: float   # per-pair sign-flip probability
    seed: int

    def __post_init__(self):
        if self.k < 1 or self.s < 1:
            raise ValueError("cluster count and size must be positive")
        if not 0 <= self.flip_p <= 0.5:
            raise ValueError("flip probability must lie in [0, 1/2]")

    @property
    def n(self) -> int:
        return self.k * self.s


def planted(spec: PlantedSpec) -> tuple[SignedGraph, Clustering, int]:
    """Planted partition: intra-cluster "+", inter-cluster "-", then each
    pair's sign flips independently with probability flip_p.

    Returns (graph, ground truth, number of flips); the flip count upper
    bounds the optimal cost.
    """
    n = spec.n
    truth = np.repeat(np.arange(spec.k, dtype=np.int64), spec.s)
    ground = Clustering(truth, np.zeros(n, dtype=bool))

    if spec.flip_p == 0.0:
        edges = []
        for c in range(spec.k):
            lo = c * spec.s
            iu, iv = np.triu_indices(spec.s, k=1)
            edges.append(np.column_stack([iu + lo, iv + lo]))
        edge_arr = np.concatenate(edges) if edges else \
            np.zeros((0, 2), dtype=np.int64)
        return SignedGraph(n, edge_arr), ground, 0

    rng = np.random.default_rng(spec.seed)
    rows = []
    flips = 0
    for u in range(n - 1):
        vs = np.arange(u + 1, n, dtype=np.int64)
        base_plus = truth[u] == truth[vs]
        flip = rng.random(len(vs)) < spec.flip_p
        flips += int(flip.sum())
        plus = base_plus ^ flip
        if plus.any():
            rows.append(np.column_stack([np.full(int(plus.sum()), u,
                                                 dtype=np.int64), vs[plus]]))
    edge_arr = np.concatenate(rows) if rows else np.zeros((0, 2),
                                                          dtype=np.int64)
    return SignedGraph(n, edge_arr), ground, flips


def matching_instance(tau) -> SignedGraph:
    """Perfect-matching family on 2m vertices: pair i of the fixed matching
    carries a "+" edge (2i, 2i+1) exactly when tau[i] is set; every other
    pair is "-".  Instances whose bit vectors differ in one position are
    adjacent graphs.
    """
    tau = np.asarray(tau, dtype=np.int64)
    if tau.ndim != 1 or len(tau) < 1:
        raise ValueError("tau must be a nonempty bit vector")
    if np.any((tau != 0) & (tau != 1)):
        raise ValueError("tau entries must be 0 or 1")
    m = len(tau)
    hits = np.nonzero(tau)[0]
    edges = np.column_stack([2 * hits, 2 * hits + 1])
    return SignedGraph(2 * m, edges)


def er_signed(n: int, p: float, seed: int) -> SignedGraph:
    """Each pair is "+" independently with probability p."""
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    if p == 0.0:
        return SignedGraph(n)
    rng = np.random.default_rng(seed)
    rows = []
    for u in range(n - 1):
        vs = np.arange(u + 1, n, dtype=np.int64)
        plus = rng.random(len(vs)) < p
        if plus.any():
            rows.append(np.column_stack([np.full(int(plus.sum()), u,
                                                 dtype=np.int64), vs[plus]]))
    edge_arr = np.concatenate(rows) if rows else np.zeros((0, 2),
                                                          dtype=np.int64)
    return SignedGraph(n, edge_arr)
