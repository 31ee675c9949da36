"""Exact min-disagree objective and a brute-force optimum for tiny graphs.

The objective counts positive edges cut between clusters plus negative
pairs kept inside clusters; the negative side is derived from cluster
sizes and internal positive-edge counts, never by materializing the
quadratic complement.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cluster import Clustering
from .graph import SignedGraph

BRUTE_FORCE_MAX_N = 11  # Bell(11) ~ 6.8e5 partitions enumerates in seconds


@dataclass(frozen=True)
class CostReport:
    total: int
    plus_cut: int
    minus_within: int


def cost(g: SignedGraph, clustering: Clustering) -> CostReport:
    """Min-disagree cost of a clustering; O(|E+| + n)."""
    assignment = np.asarray(clustering.assignment)
    if len(assignment) != g.n or (g.n and assignment.min() < 0):
        raise ValueError("clustering must assign every vertex of the graph")
    edges = g.edge_array()
    internal = int(np.count_nonzero(
        assignment[edges[:, 0]] == assignment[edges[:, 1]])) if len(edges) \
        else 0
    plus_cut = g.num_pos_edges - internal
    sizes = np.bincount(assignment) if g.n else np.zeros(0, dtype=np.int64)
    same_pairs = int((sizes * (sizes - 1) // 2).sum())
    minus_within = same_pairs - internal
    return CostReport(plus_cut + minus_within, plus_cut, minus_within)


def _growth_strings(n: int, prefix: tuple[int, ...] = (0,)):
    """Restricted-growth strings with the given prefix, lexicographically."""
    a = list(prefix) + [0] * (n - len(prefix))
    b = [1] * n  # b[i] = 1 + max(a[:i]); position i may take values 0..b[i]
    for i in range(1, n):
        b[i] = max(b[i - 1], a[i - 1] + 1)
    first_free = len(prefix)
    while True:
        yield a
        j = n - 1
        while j >= first_free and a[j] == b[j]:
            j -= 1
        if j < first_free:
            return
        a[j] += 1
        ceiling = max(b[j], a[j] + 1)
        for k in range(j + 1, n):
            a[k] = 0
            b[k] = ceiling


def _scan_partitions(n: int, edge_list: list[tuple[int, int]],
                     prefix: tuple[int, ...]):
    """Minimum (total, plus_cut, minus_within, rgs) over one prefix shard."""
    us = np.array([u for u, _ in edge_list], dtype=np.int64)
    vs = np.array([v for _, v in edge_list], dtype=np.int64)
    m = len(edge_list)
    best = None
    for a in _growth_strings(n, prefix):
        arr = np.asarray(a)
        internal = int(np.count_nonzero(arr[us] == arr[vs])) if m else 0
        sizes = np.bincount(arr)
        same_pairs = int((sizes * (sizes - 1) // 2).sum())
        total = (m - internal) + (same_pairs - internal)
        if best is None or total < best[0]:
            best = (total, m - internal, same_pairs - internal, tuple(a))
    return best


def _scan_job(args):
    return _scan_partitions(*args)


def brute_force_opt(g: SignedGraph,
                    workers: int = 1) -> tuple[CostReport, Clustering]:
    """Exhaustive optimum over all set partitions, n <= 11.

    Ties break toward the lexicographically smallest restricted-growth
    string.  With workers > 1 the enumeration is sharded by prefix and
    reduced deterministically.
    """
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"brute force is capped at n={BRUTE_FORCE_MAX_N}, got n={g.n}")
    if g.n == 0:
        return CostReport(0, 0, 0), Clustering(np.zeros(0, dtype=np.int64),
                                               np.zeros(0, dtype=bool))
    edge_list = [(int(u), int(v)) for u, v in g.edge_array()]
    prefixes = [(0,)]
    if workers > 1 and g.n >= 3:
        prefixes = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    if len(prefixes) == 1 or workers <= 1:
        results = [_scan_partitions(g.n, edge_list, p) for p in prefixes]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                _scan_job, [(g.n, edge_list, p) for p in prefixes]))
    # Lexicographic shard order makes (total, rgs) reduction deterministic.
    best = min(results, key=lambda r: (r[0], r[3]))
    total, plus_cut, minus_within, rgs = best
    witness = Clustering(np.asarray(rgs, dtype=np.int64),
                         np.zeros(g.n, dtype=bool))
    return CostReport(total, plus_cut, minus_within), witness
