"""Quantitative experiments behind the acceptance checks.

The test suite asserts on these results and the CLI bench subcommand dumps
them as CSV, so CI and offline reports share one code path.  Every
experiment is deterministic in its seed argument.
"""

from __future__ import annotations

import math
import time

import numpy as np
import scipy.sparse as sp
from scipy.stats import kstest

from . import audit as audit_mod
from . import mpc as mpc_mod
from .cluster import Clustering, run
from .cost import brute_force_opt, cost
from .generators import PlantedSpec, er_signed, matching_instance, planted
from .graph import SignedGraph
from .noise import TAG_DEGREE, laplace_array
from .params import derive
from .reference import AgreementVectors, alg_cc, sparsify

# Criterion 12 multiplier: fixed at twice the ratio measured once from the
# reference-algorithm baseline on the calibration seeds (see
# calibrate_criterion_12); CI uses this frozen value.
CRITERION12_CAL_SEEDS = (9101, 9102, 9103)
CRITERION12_FIXED_MULTIPLIER = 3.785


def _result(num, name, passed, detail, rows, elapsed):
    return {"criterion": num, "name": name, "passed": bool(passed),
            "detail": detail, "rows": rows, "seconds": round(elapsed, 2)}


def _zero_noise_params(beta=None, lambda_=None):
    kwargs = {}
    if beta is not None:
        kwargs["beta"] = beta
    if lambda_ is not None:
        kwargs["lambda_"] = lambda_
    return derive(1.0, 0.1, noise_multiplier=0.0, t0_override=0.0, **kwargs)


def _random_test_graph(rng, n_max=150):
    n = int(rng.integers(20, n_max + 1))
    p = float(rng.choice([0.05, 0.1, 0.2]))
    return er_signed(n, p, int(rng.integers(0, 2 ** 31)))


# -- criterion 1: zero-noise reduction ---------------------------------------

def criterion_01(seed: int = 101):
    start = time.time()
    params = _zero_noise_params()
    vectors = AgreementVectors(beta=params.beta, lambda_=params.lambda_)
    rng = np.random.default_rng(seed)
    rows = []
    matches = 0
    for idx in range(100):
        family = ("er-0.05", "er-0.2", "planted-2", "planted-5")[idx % 4]
        gseed = int(rng.integers(0, 2 ** 31))
        if family == "er-0.05":
            g = er_signed(int(rng.integers(40, 201)), 0.05, gseed)
        elif family == "er-0.2":
            g = er_signed(int(rng.integers(40, 201)), 0.2, gseed)
        elif family == "planted-2":
            g, _, _ = planted(PlantedSpec(2, int(rng.integers(10, 101)),
                                          0.1, gseed))
        else:
            g, _, _ = planted(PlantedSpec(5, int(rng.integers(4, 41)),
                                          0.1, gseed))
        dp_clustering, trace = run(g, params, int(rng.integers(0, 2 ** 31)))
        ref_clustering = alg_cc(g, vectors)
        equal = (dp_clustering.partition() == ref_clustering.partition()
                 and np.array_equal(dp_clustering.singleton_light,
                                    ref_clustering.singleton_light))
        matches += equal
        rows.append({"family": family, "n": g.n, "edges": g.num_pos_edges,
                     "exact_match": int(equal)})
    elapsed = time.time() - start
    passed = matches == 100 and elapsed < 30.0
    return _result(1, "zero-noise-reduction", passed,
                   f"{matches}/100 exact partition matches in {elapsed:.1f}s "
                   "(budget 30s)", rows, elapsed)


# -- criterion 2: sandwich inequality ----------------------------------------

def criterion_02(seed: int = 202):
    start = time.time()
    rng = np.random.default_rng(seed)
    rows = []
    violations = 0
    for trial in range(100):
        g = _random_test_graph(rng)
        beta_l, beta_m, beta_u = np.sort(rng.uniform(0.0, 0.6, 3))
        lam_l, lam_m, lam_u = np.sort(rng.uniform(0.0, 0.6, 3))
        edges = g.edge_array()
        pick = rng.random(len(edges)) < 0.1
        e_rem = frozenset(map(tuple, edges[pick]))
        costs = [
            cost(g, alg_cc(g, AgreementVectors(b, l, e_rem))).total
            for b, l in ((beta_m, lam_m), (beta_u, lam_u), (beta_l, lam_l))
        ]
        ok = costs[0] <= costs[1] + costs[2]
        violations += not ok
        rows.append({"trial": trial, "n": g.n, "cost_mid": costs[0],
                     "cost_upper": costs[1], "cost_lower": costs[2],
                     "ok": int(ok)})
    elapsed = time.time() - start
    return _result(2, "sandwich-inequality", violations == 0,
                   f"{violations} violations over 100 sandwiched trials",
                   rows, elapsed)


# -- criterion 3: threshold monotonicity -------------------------------------

def criterion_03(seed: int = 303):
    start = time.time()
    rng = np.random.default_rng(seed)
    rows = []
    violations = 0
    for trial in range(100):
        g = _random_test_graph(rng)
        edges = g.edge_array()
        beta_lo, beta_hi = {}, {}
        for u, v in edges:
            a, b = np.sort(rng.uniform(0.0, 0.8, 2))
            beta_lo[(int(u), int(v))] = float(a)
            beta_hi[(int(u), int(v))] = float(b)
        lam_pairs = np.sort(rng.uniform(0.0, 0.8, (g.n, 2)), axis=1)
        pick = rng.random(len(edges)) < 0.1
        e_rem = frozenset(map(tuple, edges[pick]))
        t_lo = sparsify(g, AgreementVectors(beta_lo, lam_pairs[:, 0], e_rem))
        t_hi = sparsify(g, AgreementVectors(beta_hi, lam_pairs[:, 1], e_rem))
        keep_lo = _final_keep(t_lo)
        keep_hi = _final_keep(t_hi)
        bad = {
            "light-down": int(np.any(t_hi.light & ~t_lo.light)),
            "heavy-up": int(np.any(~t_lo.light & t_hi.light)),
            "removed-down": int(np.any(~keep_hi & keep_lo)),
            "remains-up": int(np.any(keep_lo & ~keep_hi)),
        }
        violations += sum(bad.values()) > 0
        rows.append({"trial": trial, "n": g.n, **bad})
    elapsed = time.time() - start
    return _result(3, "threshold-monotonicity", violations == 0,
                   f"{violations} trials with monotonicity violations "
                   "(of 100)", rows, elapsed)


def _final_keep(trace):
    light = trace.light
    us, vs = trace.edges[:, 0], trace.edges[:, 1]
    return ~trace.removed & ~(light[us] & light[vs])


# -- criterion 4: brute-force dominance and cost cross-check ------------------

def _cost_scan_oracle(g: SignedGraph, clustering: Clustering):
    """Independent O(n^2) all-pairs objective."""
    a = clustering.assignment
    total = 0
    adj = {tuple(e) for e in g.edge_array()}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            same = a[u] == a[v]
            is_edge = (u, v) in adj
            if is_edge and not same:
                total += 1
            if not is_edge and same:
                total += 1
    return total


def criterion_04(seed: int = 404):
    start = time.time()
    rng = np.random.default_rng(seed)
    rows = []
    dominance_bad = 0
    for trial in range(100):
        n = int(rng.integers(4, 10))
        g = er_signed(n, float(rng.uniform(0.2, 0.7)),
                      int(rng.integers(0, 2 ** 31)))
        opt_report, _ = brute_force_opt(g)
        produced = [
            alg_cc(g, AgreementVectors(float(rng.uniform(0, 1.5)),
                                       float(rng.uniform(0, 1.0)))),
            run(g, _zero_noise_params(), int(rng.integers(0, 2 ** 31)))[0],
            run(g, derive(1.0, 0.1), int(rng.integers(0, 2 ** 31)))[0],
        ]
        worst = max(cost(g, c).total for c in produced)
        ok = all(cost(g, c).total >= opt_report.total for c in produced)
        dominance_bad += not ok
        rows.append({"trial": trial, "n": n, "opt": opt_report.total,
                     "max_produced": worst, "ok": int(ok)})
    scan_bad = 0
    for trial in range(200):
        n = int(rng.integers(5, 61))
        g = er_signed(n, float(rng.uniform(0.05, 0.4)),
                      int(rng.integers(0, 2 ** 31)))
        labels = rng.integers(0, int(rng.integers(1, n + 1)), n)
        _, labels = np.unique(labels, return_inverse=True)
        c = Clustering(labels.astype(np.int64), np.zeros(n, dtype=bool))
        report = cost(g, c)
        if report.total != _cost_scan_oracle(g, c):
            scan_bad += 1
        if report.total != report.plus_cut + report.minus_within:
            scan_bad += 1
    elapsed = time.time() - start
    passed = dominance_bad == 0 and scan_bad == 0
    return _result(4, "brute-force-dominance", passed,
                   f"{dominance_bad} dominance violations (100 trials), "
                   f"{scan_bad} closed-form/scan mismatches (200 trials)",
                   rows, elapsed)


# -- criterion 5: Laplace tails ------------------------------------------------

def criterion_05(seed: int = 505):
    start = time.time()
    scale = 1.0
    m = 1_000_000
    draws = laplace_array(seed, TAG_DEGREE, np.arange(m),
                          np.zeros(m, dtype=np.int64), scale)
    frac_pos = float(np.mean(draws > 0))
    tail_1b = float(np.mean(np.abs(draws) > scale))
    tail_2b = float(np.mean(draws > 2 * scale))
    ks_draws = laplace_array(seed + 1, TAG_DEGREE, np.arange(100_000),
                             np.zeros(100_000, dtype=np.int64), scale)
    ks_stat = float(kstest(ks_draws, "laplace", args=(0.0, scale)).statistic)
    ks_crit = 1.6276 / math.sqrt(len(ks_draws))
    checks = {
        "positive-fraction": abs(frac_pos - 0.5) <= 0.002,
        "tail-|Y|>b": abs(tail_1b - math.exp(-1)) <= 0.01,
        "tail-Y>2b": abs(tail_2b - 0.5 * math.exp(-2)) <= 0.005,
        "ks-1pct": ks_stat < ks_crit,
    }
    rows = [{"statistic": "positive_fraction", "value": frac_pos,
             "target": 0.5, "tolerance": 0.002},
            {"statistic": "tail_abs_gt_b", "value": tail_1b,
             "target": math.exp(-1), "tolerance": 0.01},
            {"statistic": "tail_gt_2b", "value": tail_2b,
             "target": 0.5 * math.exp(-2), "tolerance": 0.005},
            {"statistic": "ks", "value": ks_stat, "target": ks_crit,
             "tolerance": 0.0}]
    elapsed = time.time() - start
    return _result(5, "laplace-tails", all(checks.values()),
                   "; ".join(f"{k}={'ok' if v else 'FAIL'}"
                             for k, v in checks.items()), rows, elapsed)


# -- criterion 6: gamma identity and threshold margin --------------------------

def criterion_06(seed: int = 606):
    start = time.time()
    rng = np.random.default_rng(seed)
    worst_residual = 0.0
    worst_margin = 0.0
    gamma_floor_ok = True
    rows = []
    for _ in range(1000):
        eps = float(rng.uniform(0.01, 10.0))
        dlt = float(10 ** rng.uniform(-9, math.log10(0.4)))
        p = derive(eps, dlt)
        lhs = (math.sqrt(2) * p.epsilon_agr / p.gamma
               + 2 * p.epsilon_agr ** 2
               / (p.gamma ** 2 * math.log(1 / p.delta_agr)))
        residual = abs(lhs - p.epsilon_agr) / p.epsilon_agr
        worst_residual = max(worst_residual, residual)
        gamma_floor_ok &= p.gamma >= math.sqrt(2) - 1e-12
        margin = 8 * math.log(16 / dlt) / eps
        worst_margin = max(worst_margin,
                           abs((p.t0 - p.t1) - margin) / margin)
    rows.append({"worst_gamma_residual": worst_residual,
                 "worst_t0_t1_margin_error": worst_margin,
                 "gamma_floor_ok": int(gamma_floor_ok)})
    elapsed = time.time() - start
    passed = worst_residual <= 1e-9 and worst_margin <= 1e-6 and gamma_floor_ok
    return _result(6, "gamma-identity", passed,
                   f"max gamma residual {worst_residual:.2e} (<=1e-9), "
                   f"max t0-t1 margin error {worst_margin:.2e}", rows,
                   elapsed)


# -- criterion 7: sampled estimator ---------------------------------------------

def criterion_07(seed: int = 707):
    start = time.time()
    n = 512
    g = er_signed(n, 0.3, seed)
    params = derive(1.0, 0.1)
    rows = []

    fam = mpc_mod.build_samples(g, params, a=30.0, seed=seed + 1)
    edges = g.edge_array()
    usable = np.nonzero(np.abs(fam.level_of[edges[:, 0]]
                               - fam.level_of[edges[:, 1]]) <= 1)[0]
    rng = np.random.default_rng(seed + 2)
    pick = rng.choice(usable, size=100, replace=False)
    exact_bad = 0
    for u, v in edges[pick]:
        est = mpc_mod.estimate_X(int(u), int(v), fam)
        truth = g.sym_diff_size(int(u), int(v))
        if est is None or est[0] != truth:
            exact_bad += 1
    rows.append({"part": "saturated", "a": 30.0, "pairs": 100,
                 "mismatches": exact_bad})

    # Unsaturated regime: the probability formula is only exercised below
    # the clamp, which at this graph size needs a small sampling constant.
    a_small = 0.5
    fam_small = mpc_mod.build_samples(g, params, a_small, seed + 3)
    u = v = None
    for eu, ev in edges:
        k_u, k_v = int(fam_small.level_of[eu]), int(fam_small.level_of[ev])
        if k_u == k_v and fam_small.probs[k_u] < 1.0:
            u, v = int(eu), int(ev)
            break
    level = int(fam_small.level_of[u])
    prob = float(fam_small.probs[level])
    truth = g.sym_diff_size(u, v)
    trials = 10_000
    xs = np.empty(trials)
    for t in range(trials):
        fam_t = mpc_mod.build_samples(g, params, a_small, seed + 10 + t,
                                      vertices=(u, v))
        xs[t] = mpc_mod.estimate_X(u, v, fam_t)[0]
    expected = prob * truth
    sigma = float(xs.std(ddof=1)) / math.sqrt(trials)
    mean_ok = abs(xs.mean() - expected) <= 3 * sigma
    rows.append({"part": "unsaturated", "a": a_small, "prob": prob,
                 "sym_diff": truth, "mean_x": float(xs.mean()),
                 "expected": expected, "three_sigma": 3 * sigma,
                 "ok": int(mean_ok)})
    elapsed = time.time() - start
    passed = exact_bad == 0 and mean_ok
    return _result(7, "mpc-estimator", passed,
                   f"saturated mismatches {exact_bad}/100; unsaturated mean "
                   f"{xs.mean():.3f} vs {expected:.3f} (3sigma "
                   f"{3 * sigma:.3f})", rows, elapsed)


# -- criterion 8: diameter of sparsified components -----------------------------

def _component_diameter_ok(adj: sp.csr_matrix, members: np.ndarray,
                           max_hops: int = 4) -> bool:
    sub = adj[members][:, members]
    reach = (sub + sp.identity(len(members), dtype=np.int8,
                               format="csr")).astype(bool)
    power = reach
    for _ in range(max_hops - 1):
        power = (power @ reach).astype(bool)
    return power.nnz == len(members) ** 2


def criterion_08(seed: int = 808):
    start = time.time()
    configs = ([(200, 4, 0.01, 0.1, 0.05)] * 15
               + [(400, 4, 0.01, 0.1, 0.05)] * 10
               + [(800, 8, 0.005, 0.1, 0.05)] * 10
               + [(1200, 8, 0.002, 0.8 / 36, 0.8 / 36)] * 8
               + [(2000, 10, 0.001, 0.8 / 36, 0.8 / 36)] * 7)
    rng = np.random.default_rng(seed)
    rows = []
    violations = 0
    checked_components = 0
    for idx, (n, k, flip, beta, lam) in enumerate(configs):
        assert 5 * beta + 2 * lam < 1 / 1.1
        g, _, _ = planted(PlantedSpec(k, n // k, flip,
                                      int(rng.integers(0, 2 ** 31))))
        params = _zero_noise_params(beta=beta, lambda_=lam)
        _, trace = run(g, params, int(rng.integers(0, 2 ** 31)))
        edges = trace.sparsified_edges
        if len(edges) == 0:
            rows.append({"instance": idx, "n": g.n, "components": 0,
                         "violations": 0})
            continue
        adj = sp.csr_matrix(
            (np.ones(2 * len(edges), dtype=np.int8),
             (np.concatenate([edges[:, 0], edges[:, 1]]),
              np.concatenate([edges[:, 1], edges[:, 0]]))),
            shape=(g.n, g.n))
        n_comp, labels = sp.csgraph.connected_components(adj, directed=False)
        bad_here = 0
        comp_count = 0
        for c in range(n_comp):
            members = np.nonzero(labels == c)[0]
            if len(members) < 2:
                continue
            comp_count += 1
            if not _component_diameter_ok(adj, members):
                bad_here += 1
        violations += bad_here
        checked_components += comp_count
        rows.append({"instance": idx, "n": g.n, "components": comp_count,
                     "violations": bad_here})
    elapsed = time.time() - start
    passed = violations == 0 and elapsed < 120.0
    return _result(8, "diameter-4", passed,
                   f"{violations} diameter violations over "
                   f"{checked_components} non-singleton components, 50 "
                   f"instances, {elapsed:.1f}s (budget 120s)", rows, elapsed)


# -- criterion 9: MPC accounting -------------------------------------------------

def criterion_09(seed: int = 909):
    start = time.time()
    slack = 32.0
    params = _zero_noise_params()
    rows = []
    budget_ok = True
    ratios = []
    for n in (2 ** 10, 2 ** 12, 2 ** 14):
        g, _, _ = planted(PlantedSpec(n // 64, 64, 0.0, seed))
        ratio = None
        for mu in (0.3, 0.5):
            _, stats = mpc_mod.simulate(g, params, mu, a=30.0, seed=seed,
                                        budget_slack=slack)
            budget = math.ceil(n ** mu) * slack
            budget_ok &= stats.peak_machine_words <= budget
            ratio = stats.total_words / (g.num_pos_edges * math.log(n))
            rows.append({"n": n, "mu": mu, "machines": stats.machines,
                         "peak_words": stats.peak_machine_words,
                         "budget": budget,
                         "total_words": stats.total_words,
                         "ratio_words_per_edge_log_n": ratio,
                         "rounds": stats.rounds,
                         "diameter_flag": int(stats.diameter_flag)})
        ratios.append(ratio)
    mean_ratio = float(np.mean(ratios))
    max_dev = max(abs(r - mean_ratio) / mean_ratio for r in ratios)
    elapsed = time.time() - start
    passed = budget_ok and max_dev <= 0.20
    return _result(9, "mpc-accounting", passed,
                   f"budgets respected: {budget_ok}; total-memory ratio "
                   f"{mean_ratio:.1f} +- {100 * max_dev:.1f}% across n "
                   "(tolerance 20%)", rows, elapsed)


# -- criterion 10: lower-bound family ---------------------------------------------

def criterion_10(seed: int = 1010):
    start = time.time()
    n = 2000
    m = n // 2
    trials = 200
    params = derive(1.0, 0.1)
    rng = np.random.default_rng(seed)
    costs = np.empty(trials)
    for t in range(trials):
        tau = rng.integers(0, 2, m)
        g = matching_instance(tau)
        clustering, _ = run(g, params, int(rng.integers(0, 2 ** 31)))
        costs[t] = cost(g, clustering).total
    mean_cost = float(costs.mean())
    floor = n / 20
    # All-singleton behavior prices every "+" edge, Binomial(m, 1/2) per trial.
    predicted = m / 2
    sigma_mean = math.sqrt(m * 0.25) / math.sqrt(trials)
    rows = [{"trials": trials, "n": n, "mean_cost": mean_cost,
             "floor": floor, "predicted": predicted,
             "three_sigma": 3 * sigma_mean}]
    elapsed = time.time() - start
    passed = (mean_cost >= floor
              and abs(mean_cost - predicted) <= 3 * sigma_mean)
    return _result(10, "lower-bound-family", passed,
                   f"mean cost {mean_cost:.1f} >= floor {floor:.0f}; "
                   f"|{mean_cost:.1f} - {predicted:.0f}| <= "
                   f"{3 * sigma_mean:.1f}", rows, elapsed)


# -- criterion 11: privacy audit ----------------------------------------------------

def criterion_11(seed: int = 1111):
    start = time.time()
    params = derive(1.0, 0.1, t0_override=2.0)
    m = 8
    tau_full = np.ones(m, dtype=np.int64)
    tau_miss = tau_full.copy()
    tau_miss[0] = 0
    g_with = matching_instance(tau_full)
    g_without = matching_instance(tau_miss)
    trials = 100_000
    slack = 0.05

    honest = audit_mod.audit_step(
        "noised-degree", g_with, g_without, (0, 1), trials, seed, params,
        slack=slack)
    broken = audit_mod.audit_step(
        "noised-degree", g_with, g_without, (0, 1), trials, seed + 1, params,
        slack=slack, noise_scale_factor=0.5)
    sanity = audit_mod.audit_step(
        "noised-degree", g_with, g_with, (0, 1), trials, seed + 2, params,
        slack=slack)

    # False-alarm rate on a correct scalar Laplace mechanism with a tight
    # threshold event (realized loss exactly epsilon).
    eps_true = 1.0
    alarms = 0
    repeats = 200
    for r in range(repeats):
        report = audit_mod.audit_mechanism(
            lambda rng, k: 1.0 + rng.laplace(0, 1 / eps_true, k) >= 1.5,
            lambda rng, k: 0.0 + rng.laplace(0, 1 / eps_true, k) >= 1.5,
            eps_true, 0.0, 20_000, seed + 10 + r, alpha=0.05)
        alarms += report.flagged
    alarm_bound = 0.05 * repeats + 3 * math.sqrt(repeats * 0.05 * 0.95)

    rows = [
        {"case": "honest", "eps_upper": honest.eps_upper,
         "eps_theory": honest.eps_theory, "passes": int(honest.passes),
         "flagged": int(honest.flagged)},
        {"case": "broken-half-noise", "eps_lower": broken.eps_lower,
         "eps_theory": broken.eps_theory, "flagged": int(broken.flagged)},
        {"case": "identical-sanity", "eps_upper": sanity.eps_upper,
         "flagged": int(sanity.flagged)},
        {"case": "false-alarm", "alarms": alarms, "repeats": repeats,
         "bound": alarm_bound},
    ]
    elapsed = time.time() - start
    passed = (honest.passes and not honest.flagged and broken.flagged
              and not sanity.flagged and abs(sanity.eps_upper) <= 0.1
              and alarms <= alarm_bound)
    return _result(11, "privacy-audit", passed,
                   f"honest eps_upper {honest.eps_upper:.3f} <= "
                   f"{honest.eps_theory:.3f}+{slack}; broken flagged: "
                   f"{broken.flagged}; alarms {alarms}/{repeats} (bound "
                   f"{alarm_bound:.1f})", rows, elapsed)


# -- criterion 12: approximation trend -----------------------------------------------

def _criterion_12_instance(seed: int):
    return planted(PlantedSpec(20, 100, 0.05, seed))


def calibrate_criterion_12():
    """Reference-baseline ratio this criterion's multiplier was frozen from."""
    ratios = []
    params = derive(1.0, 0.1)
    vectors = AgreementVectors(beta=params.beta, lambda_=params.lambda_)
    for s in CRITERION12_CAL_SEEDS:
        g, _, planted_cost = _criterion_12_instance(s)
        ratios.append(cost(g, alg_cc(g, vectors)).total / planted_cost)
    return max(ratios)


def criterion_12(seed: int = 1212):
    start = time.time()
    params = derive(1.0, 0.1, noise_multiplier=0.1, t0_override=0.0)
    multiplier = CRITERION12_FIXED_MULTIPLIER
    rows = []
    passes = 0
    for t in range(10):
        g, _, planted_cost = _criterion_12_instance(seed + t)
        clustering, _ = run(g, params, seed + 100 + t)
        total = cost(g, clustering).total
        ok = total <= multiplier * planted_cost
        passes += ok
        rows.append({"seed": seed + t, "planted_cost": planted_cost,
                     "algorithm_cost": total,
                     "bound": multiplier * planted_cost, "ok": int(ok)})
    elapsed = time.time() - start
    return _result(12, "approximation-trend", passes >= 9,
                   f"{passes}/10 seeds within {multiplier}x planted cost "
                   "(need 9)", rows, elapsed)


CRITERIA = {
    1: criterion_01, 2: criterion_02, 3: criterion_03, 4: criterion_04,
    5: criterion_05, 6: criterion_06, 7: criterion_07, 8: criterion_08,
    9: criterion_09, 10: criterion_10, 11: criterion_11, 12: criterion_12,
}


def run_criterion(num: int):
    return CRITERIA[num]()
