"""Bulk-synchronous simulation of the clustering pipeline.

Neighborhood symmetric differences are estimated from level-indexed vertex
samples instead of being computed exactly, components come from a bounded
number of min-label broadcast rounds (valid because sparsified components
have hop-diameter at most 4 in the admissible parameter regime), and every
stage charges its records to virtual machines with a fixed word budget.

The simulator is a faithful memory/round accountant, not a distributed
runtime: machines are virtual, messages are in-memory, and item order is
canonical, so identical inputs give identical outputs and statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .cluster import Clustering
from .graph import SignedGraph
from .noise import (TAG_AGREEMENT, TAG_DEGREE, TAG_LIGHT, TAG_SAMPLE,
                    NoiseLedger, agreement_scale, agreement_scales,
                    laplace_array, uniform_array)
from .params import PrivacyParams

LABEL_BROADCAST_ROUNDS = 5  # diameter 4 plus one stabilization round
DEFAULT_SAMPLING_CONSTANT = 30.0
DEFAULT_BUDGET_SLACK = 32.0
DEFAULT_MAX_ROUNDS = 16


class MachineBudgetError(RuntimeError):
    """A record cannot fit into the per-machine word budget."""


@dataclass
class SampleFamily:
    """Level-indexed vertex samples and the two kept sets per vertex.

    levels[k] is the k-th power of 1/(1 - beta_hat); a vertex of closed
    degree d sits at the largest level not exceeding d and keeps its
    neighborhood intersected with that level's sample and with the next
    level's sample.  A saturated level (clamped probability 1) stores no
    mask: its sample is all of V.
    """
    n: int
    beta_hat: float
    a: float
    degrees: np.ndarray
    levels: np.ndarray
    probs: np.ndarray
    membership: dict            # level index -> bool mask over V (None = all)
    level_of: np.ndarray        # per vertex: level index of j_v
    kept_lower: sp.csr_matrix   # row v = S(v, j_v)
    kept_upper: sp.csr_matrix   # row v = S(v, j_v / (1 - beta_hat))
    built: np.ndarray           # bool: kept sets materialized for this vertex

    def level_value(self, v: int) -> float:
        return float(self.levels[self.level_of[v]])

    def kept(self, v: int, upper: bool = False) -> np.ndarray:
        mat = self.kept_upper if upper else self.kept_lower
        return mat.indices[mat.indptr[v]:mat.indptr[v + 1]]

    def kept_sizes(self, upper: bool = False) -> np.ndarray:
        mat = self.kept_upper if upper else self.kept_lower
        return np.diff(mat.indptr)

    def membership_words(self) -> np.ndarray:
        """|S(j)| per materialized level; saturated levels hold all of V."""
        return np.array([self.n if m is None else int(m.sum())
                         for m in self.membership.values()], dtype=np.int64)


def sample_levels(max_degree: float, beta_hat: float) -> np.ndarray:
    """Ascending powers of 1/(1-beta_hat) covering 1..max_degree, plus the
    one extra level the upper kept sets live on."""
    if not 0 < beta_hat < 1:
        raise ValueError("beta_hat must lie in (0, 1)")
    ratio = 1.0 / (1.0 - beta_hat)
    levels = [1.0]
    while levels[-1] * ratio <= max_degree:
        levels.append(levels[-1] * ratio)
    levels.append(levels[-1] * ratio)
    return np.array(levels)


def build_samples(g: SignedGraph, params: PrivacyParams, a: float, seed: int,
                  vertices=None) -> SampleFamily:
    """Draw the level samples and materialize kept sets.

    Membership is decided independently per (level, vertex) from the
    key-derived sample stream.  With vertices given, kept sets are built
    only for that subset (level samples are still global).
    """
    if a <= 0:
        raise ValueError("sampling constant must be positive")
    n = g.n
    beta_hat = 1.1 * params.beta
    deg = g.degrees
    max_deg = int(deg.max()) if n else 1
    levels = sample_levels(max_deg, beta_hat)
    log_n = math.log(n) if n >= 2 else 0.0
    probs = np.minimum(a * log_n / (beta_hat * levels), 1.0)

    level_of = np.searchsorted(levels, deg, side="right") - 1

    built = np.zeros(n, dtype=bool)
    targets = np.arange(n) if vertices is None else \
        np.asarray(sorted(set(int(v) for v in vertices)), dtype=np.int64)
    built[targets] = True

    # Only levels some kept set lives on are ever materialized; saturated
    # ones need no draws at all (the sample is all of V).
    referenced = np.unique(np.concatenate(
        [level_of[targets], level_of[targets] + 1])) if len(targets) else \
        np.zeros(0, dtype=np.int64)
    membership: dict[int, np.ndarray | None] = {}
    for k in referenced:
        k = int(k)
        if probs[k] >= 1.0:
            membership[k] = None
        else:
            draws = uniform_array(seed, TAG_SAMPLE,
                                  np.full(n, k, dtype=np.int64),
                                  np.arange(n, dtype=np.int64))
            membership[k] = draws < probs[k]

    closed = g.closed_csr()
    lower_rows: list[np.ndarray] = []
    upper_rows: list[np.ndarray] = []
    for v in targets:
        nbrs = closed.indices[closed.indptr[v]:closed.indptr[v + 1]]
        k = int(level_of[v])
        mask_lo = membership[k]
        mask_up = membership[k + 1]
        lower_rows.append(nbrs if mask_lo is None else nbrs[mask_lo[nbrs]])
        upper_rows.append(nbrs if mask_up is None else nbrs[mask_up[nbrs]])

    kept_lower = _rows_to_csr(n, targets, lower_rows)
    kept_upper = _rows_to_csr(n, targets, upper_rows)
    return SampleFamily(
        n=n, beta_hat=beta_hat, a=a, degrees=deg, levels=levels, probs=probs,
        membership=membership, level_of=level_of,
        kept_lower=kept_lower, kept_upper=kept_upper, built=built,
    )


def _rows_to_csr(n: int, row_ids: np.ndarray,
                 rows: list[np.ndarray]) -> sp.csr_matrix:
    counts = np.zeros(n, dtype=np.int64)
    for rid, row in zip(row_ids, rows):
        counts[rid] = len(row)
    indptr = np.concatenate([[0], np.cumsum(counts)])
    indices = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
    data = np.ones(len(indices), dtype=np.int8)
    return sp.csr_matrix((data, indices, indptr), shape=(n, n))


def estimate_X(u: int, v: int, fam: SampleFamily):
    """Symmetric-difference estimate from the kept samples.

    Picks the shared level (equal levels, or one step apart with the upper
    kept set bridging the gap); returns (X, level value), or None when the
    levels differ by more than one step.
    """
    if not (fam.built[u] and fam.built[v]):
        raise ValueError("kept sets were not built for this pair")
    ku, kv = int(fam.level_of[u]), int(fam.level_of[v])
    if ku == kv:
        su, sv = fam.kept(u), fam.kept(v)
        j = fam.levels[ku]
    elif ku == kv + 1:
        su, sv = fam.kept(u), fam.kept(v, upper=True)
        j = fam.levels[ku]
    elif kv == ku + 1:
        su, sv = fam.kept(u, upper=True), fam.kept(v)
        j = fam.levels[kv]
    else:
        return None
    common = np.intersect1d(su, sv, assume_unique=True).size
    return int(len(su) + len(sv) - 2 * common), float(j)


def mpc_noised_agreement(u: int, v: int, fam: SampleFamily,
                         params: PrivacyParams, ledger: NoiseLedger) -> bool:
    """Agreement decision from sampled neighborhoods.

    A degree pre-filter answers "no" outright; otherwise the sampled
    estimate is compared against the scaled threshold.  The pre-filter
    reuses the pair noise additively exactly as specified, sign included.
    """
    d_u, d_v = int(fam.degrees[u]), int(fam.degrees[v])
    noise = ledger.draw(TAG_AGREEMENT, (u, v),
                        agreement_scale(d_u, d_v, params))
    max_d = max(d_u, d_v)
    if abs(d_u - d_v) >= params.beta * max_d - noise:
        return False
    est = estimate_X(u, v, fam)
    if est is None:
        return False
    x, j = est
    log_n = math.log(fam.n) if fam.n >= 2 else 0.0
    tau = (fam.a * log_n / j) * (max_d - noise / fam.beta_hat)
    return x <= 0.9 * tau


@dataclass
class MpcStats:
    rounds: int
    machines: int
    peak_machine_words: int
    total_words: int
    mu: float
    budget_words: int
    diameter_flag: bool = False
    stage_words: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "rounds": self.rounds, "machines": self.machines,
            "peak_machine_words": self.peak_machine_words,
            "total_words": self.total_words, "mu": self.mu,
            "budget_words": self.budget_words,
            "diameter_flag": self.diameter_flag,
            "stage_words": dict(self.stage_words),
        }


class _Accountant:
    """Greedy packer of canonical-order records into fixed-budget machines."""

    def __init__(self, budget_words: int):
        self.budget = int(budget_words)
        self.rounds = 0
        self.machines = 0
        self.peak = 0
        self.total = 0
        self.stage_words: dict[str, int] = {}

    def stage(self, name: str, sizes, rounds: int = 1) -> None:
        sizes = np.asarray(sizes, dtype=np.int64)
        self.rounds += rounds
        words = int(sizes.sum())
        self.stage_words[name] = self.stage_words.get(name, 0) + words
        self.total += words
        if len(sizes) == 0:
            return
        if int(sizes.max()) > self.budget:
            raise MachineBudgetError(
                f"stage {name}: record of {int(sizes.max())} words exceeds "
                f"the {self.budget}-word machine budget")
        prefix = np.cumsum(sizes)
        base = 0
        idx = 0
        machines = 0
        while idx < len(sizes):
            end = int(np.searchsorted(prefix, base + self.budget,
                                      side="right"))
            load = int(prefix[end - 1] - base)
            machines += 1
            self.peak = max(self.peak, load)
            base = int(prefix[end - 1])
            idx = end
        self.machines = max(self.machines, machines)


def simulate(g: SignedGraph, params: PrivacyParams, mu: float,
             a: float = DEFAULT_SAMPLING_CONSTANT, seed: int = 0,
             budget_slack: float = DEFAULT_BUDGET_SLACK,
             max_rounds: int = DEFAULT_MAX_ROUNDS
             ) -> tuple[Clustering, MpcStats]:
    """Full pipeline over virtual machines with n^mu-word memory.

    Same noise keys as the sequential pipeline, so runs with equal seeds
    draw identical noise.  After the fixed label-broadcast rounds a failed
    stabilization check switches to pointer-jumping rounds and raises the
    diameter-violation flag.
    """
    if not 0 < mu <= 1:
        raise ValueError("memory exponent must lie in (0, 1]")
    n = g.n
    if n == 0:
        empty = Clustering(np.zeros(0, dtype=np.int64), np.zeros(0, dtype=bool))
        return empty, MpcStats(0, 0, 0, 0, mu, 0)
    budget = int(math.ceil(n ** mu) * budget_slack)
    if budget < 2:
        raise ValueError(
            f"machine budget of {budget} words cannot hold one edge record")
    acct = _Accountant(budget)
    deg = g.degrees.astype(np.float64)
    ids = np.arange(n, dtype=np.int64)
    ledger = NoiseLedger(seed)

    # Residency: each vertex record carries its id, degree, and adjacency.
    acct.stage("edges", deg.astype(np.int64) + 1)

    # Noised degrees and the high-degree set.
    vertex_scale = params.noise_multiplier * 8.0 / params.epsilon
    z = laplace_array(seed, TAG_DEGREE, ids, np.zeros(n, dtype=np.int64),
                      vertex_scale)
    ledger.record_array(TAG_DEGREE, ids, None, vertex_scale, z)
    high = (deg + z) >= params.t0_effective
    acct.stage("noised-degree", np.full(n, 3, dtype=np.int64))

    edges = g.edge_array()
    us, vs = edges[:, 0], edges[:, 1]
    candidate = high[us] & high[vs]

    # Sampling: global level samples, then kept sets for needed vertices.
    needed = np.unique(np.concatenate([us[candidate], vs[candidate]])) \
        if candidate.any() else np.zeros(0, dtype=np.int64)
    fam = build_samples(g, params, a, seed, vertices=needed)
    # membership is one word per (level, vertex) entry, divisible freely
    acct.stage("sample-membership",
               np.ones(int(fam.membership_words().sum()), dtype=np.int64))
    kept_words = 2 + fam.kept_sizes() + fam.kept_sizes(upper=True)
    acct.stage("kept-sets", kept_words[needed] if len(needed) else
               np.zeros(0, dtype=np.int64))

    # Agreement decisions from sampled estimates, batched per level case.
    agree = np.zeros(len(edges), dtype=bool)
    agreement_words = np.zeros(0, dtype=np.int64)
    if candidate.any():
        cu, cv = us[candidate], vs[candidate]
        scales = agreement_scales(deg[cu], deg[cv], params)
        noise = laplace_array(seed, TAG_AGREEMENT, cu, cv, scales)
        ledger.record_array(TAG_AGREEMENT, cu, cv, scales, noise)
        max_d = np.maximum(deg[cu], deg[cv])
        pass1 = np.abs(deg[cu] - deg[cv]) < params.beta * max_d - noise

        x_val, level_val, has_level = _estimate_edges(fam, cu, cv)
        log_n = math.log(n) if n >= 2 else 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            tau = (a * log_n / level_val) * (max_d - noise / fam.beta_hat)
        agree[candidate] = pass1 & has_level & (x_val <= 0.9 * tau)

        lower_sz = fam.kept_sizes()
        upper_sz = fam.kept_sizes(upper=True)
        size_u = np.where(fam.level_of[cu] <= fam.level_of[cv],
                          lower_sz[cu], upper_sz[cu])
        size_v = np.where(fam.level_of[cv] <= fam.level_of[cu],
                          lower_sz[cv], upper_sz[cv])
        agreement_words = 3 + size_u + size_v
    acct.stage("agreement", agreement_words)

    # Lightness from noised discarded-edge counts.
    removed = ~agree
    removed_count = (np.bincount(us[removed], minlength=n)
                     + np.bincount(vs[removed], minlength=n)).astype(np.float64)
    y = laplace_array(seed, TAG_LIGHT, ids, np.zeros(n, dtype=np.int64),
                      vertex_scale)
    ledger.record_array(TAG_LIGHT, ids, None, vertex_scale, y)
    light = (removed_count + y) > params.lambda_ * deg
    acct.stage("lightness", np.full(n, 3, dtype=np.int64))

    keep = agree & ~(light[us] & light[vs])
    sparsified = edges[keep]
    acct.stage("sparsify", np.full(len(sparsified), 2, dtype=np.int64))

    # Components by synchronous min-label broadcast.
    labels, diameter_flag = _label_components(
        n, sparsified, acct, max_rounds=max_rounds)

    heavy_groups: dict[int, list[int]] = {}
    light_singletons = []
    for v in range(n):
        if light[v]:
            light_singletons.append(v)
        else:
            heavy_groups.setdefault(int(labels[v]), []).append(v)
    groups = list(heavy_groups.values()) + [[v] for v in light_singletons]
    clustering = Clustering.from_groups(n, groups, light_singletons)
    acct.stage("output", np.full(n, 2, dtype=np.int64))

    stats = MpcStats(
        rounds=acct.rounds, machines=acct.machines,
        peak_machine_words=acct.peak, total_words=acct.total, mu=mu,
        budget_words=budget, diameter_flag=diameter_flag,
        stage_words=acct.stage_words,
    )
    return clustering, stats


def _estimate_edges(fam: SampleFamily, cu: np.ndarray, cv: np.ndarray):
    """Vectorized estimate_X over candidate edges, grouped by level case."""
    m = len(cu)
    x_val = np.zeros(m, dtype=np.float64)
    level_val = np.ones(m, dtype=np.float64)
    ku, kv = fam.level_of[cu], fam.level_of[cv]
    has_level = np.abs(ku - kv) <= 1

    lower_nnz = fam.kept_sizes()
    upper_nnz = fam.kept_sizes(upper=True)
    cases = [
        (ku == kv, fam.kept_lower, lower_nnz, fam.kept_lower, lower_nnz, ku),
        (ku == kv + 1, fam.kept_lower, lower_nnz, fam.kept_upper, upper_nnz,
         ku),
        (kv == ku + 1, fam.kept_upper, upper_nnz, fam.kept_lower, lower_nnz,
         kv),
    ]
    for mask, mat_u, nnz_u, mat_v, nnz_v, k_used in cases:
        if not mask.any():
            continue
        gu, gv = cu[mask], cv[mask]
        inter = _row_intersections(mat_u, gu, mat_v, gv)
        x_val[mask] = nnz_u[gu] + nnz_v[gv] - 2 * inter
        level_val[mask] = fam.levels[k_used[mask]]
    return x_val, level_val, has_level


def _row_intersections(mat_a: sp.csr_matrix, rows_a: np.ndarray,
                       mat_b: sp.csr_matrix, rows_b: np.ndarray,
                       chunk: int = 65536) -> np.ndarray:
    out = np.empty(len(rows_a), dtype=np.int64)
    for lo in range(0, len(rows_a), chunk):
        hi = min(lo + chunk, len(rows_a))
        inter = mat_a[rows_a[lo:hi]].multiply(mat_b[rows_b[lo:hi]]).sum(axis=1)
        out[lo:hi] = np.asarray(inter).ravel()
    return out


def _label_components(n: int, edges: np.ndarray, acct: _Accountant,
                      max_rounds: int) -> tuple[np.ndarray, bool]:
    """Min-label broadcast; stabilization expected within the fixed rounds.

    If the last fixed round still changes labels, the component diameter
    exceeded its guarantee: continue with pointer-jumping rounds until a
    fixpoint and report the violation flag.
    """
    labels = np.arange(n, dtype=np.int64)
    us, vs = (edges[:, 0], edges[:, 1]) if len(edges) else \
        (np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    round_words = np.concatenate([
        np.full(len(edges), 2, dtype=np.int64),
        np.full(n, 1, dtype=np.int64),
    ])

    def propagate(lab: np.ndarray) -> np.ndarray:
        new = lab.copy()
        if len(us):
            np.minimum.at(new, us, lab[vs])
            np.minimum.at(new, vs, lab[us])
        return new

    changed_last = False
    for _ in range(LABEL_BROADCAST_ROUNDS):
        acct.stage("label-broadcast", round_words)
        new = propagate(labels)
        changed_last = bool(np.any(new != labels))
        labels = new

    diameter_flag = changed_last
    while changed_last:
        acct.stage("label-doubling", round_words)
        new = propagate(labels)
        new = np.minimum(new, new[new])
        changed_last = bool(np.any(new != labels))
        labels = new
        if acct.rounds > max_rounds + 4 * int(math.log2(n + 1)) + 8:
            raise RuntimeError("label propagation failed to converge")
    return labels, diameter_flag


def calibrate_a(g: SignedGraph, params: PrivacyParams, a_grid,
                trials: int, seed: int) -> dict:
    """Sweep the sampling constant and measure the agreement error band.

    For each candidate value, over fresh sample families, measures how
    often pairs in strict 0.8-noised agreement are answered "no" and how
    often pairs not in noised agreement are answered "yes".  Returns the
    per-value band and the smallest value whose observed error stays
    within 1/n.
    """
    edges = g.edge_array()
    deg = g.degrees
    results = []
    target = 1.0 / g.n if g.n else 0.0
    a_star = None
    for a in a_grid:
        false_no = 0
        n_yes = 0
        false_yes = 0
        n_no = 0
        for t in range(trials):
            run_seed = seed * 1_000_003 + t
            ledger = NoiseLedger(run_seed)
            fam = build_samples(g, params, a, run_seed)
            for u, v in edges:
                u, v = int(u), int(v)
                noise = ledger.draw(TAG_AGREEMENT, (u, v),
                                    agreement_scale(int(deg[u]), int(deg[v]),
                                                    params))
                sym = g.sym_diff_size(u, v)
                max_d = max(int(deg[u]), int(deg[v]))
                answer = mpc_noised_agreement(u, v, fam, params, ledger)
                if sym + noise < 0.8 * params.beta * max_d:
                    n_yes += 1
                    false_no += int(not answer)
                elif not sym + noise < params.beta * max_d:
                    n_no += 1
                    false_yes += int(answer)
        band = {
            "a": float(a),
            "pairs_in_08_agreement": n_yes,
            "false_no_rate": false_no / n_yes if n_yes else 0.0,
            "pairs_not_in_agreement": n_no,
            "false_yes_rate": false_yes / n_no if n_no else 0.0,
        }
        results.append(band)
        if a_star is None and band["false_no_rate"] <= target \
                and band["false_yes_rate"] <= target:
            a_star = float(a)
    return {"sweep": results, "a_star": a_star, "target": target}
