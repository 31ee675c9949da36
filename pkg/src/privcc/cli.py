"""Batch command-line interface.

Exit codes: 0 success, 1 usage or validation error, 2 I/O error.  Every
randomized subcommand requires --seed.  Outputs produced with a scaled
noise multiplier or an overridden degree threshold carry a NON-PRIVATE
banner; the reference subcommand is always banner-marked since it runs the
noise-free baseline.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import bench as bench_mod
from . import mpc as mpc_mod
from .audit import audit_step
from .cluster import parse_clustering, run, write_clustering
from .cost import brute_force_opt, cost
from .generators import PlantedSpec, er_signed, matching_instance, planted
from .graph import EdgeListParseError, dump_edge_list, load_edge_list
from .params import DEFAULT_BETA, DEFAULT_LAMBDA, ParameterError, derive
from .reference import AgreementVectors, alg_cc, alg_cc_prime

NON_PRIVATE_BANNER = ("NON-PRIVATE: testing configuration (scaled noise or "
                      "overridden degree threshold); output carries no "
                      "privacy guarantee")
REFERENCE_BANNER = ("REFERENCE (NON-PRIVATE): noise-free baseline "
                    "clustering, no privacy guarantee")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _add_privacy_flags(sub, with_noise_scale=True):
    sub.add_argument("--epsilon", type=float, required=True)
    sub.add_argument("--delta", type=float, required=True)
    sub.add_argument("--beta", type=float, default=DEFAULT_BETA)
    sub.add_argument("--lambda", dest="lambda_", type=float,
                     default=DEFAULT_LAMBDA)
    sub.add_argument("--beta-prime", type=float, default=0.1)
    sub.add_argument("--lambda-prime", type=float, default=0.1)
    if with_noise_scale:
        sub.add_argument("--noise-scale", type=float, default=1.0,
                         help="noise multiplier; anything but 1 is "
                              "NON-PRIVATE testing mode")
        sub.add_argument("--t0-override", type=float, default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="privcc")
    parser.add_argument("--threads", type=int,
                        default=int(os.environ.get("PRIVCC_THREADS", "1")),
                        help="worker cap for shardable computations")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("params", parents=[], help="print the constant table")
    _add_privacy_flags(p, with_noise_scale=False)
    p.add_argument("--n-hint", type=int, default=None)

    p = subs.add_parser("cluster", help="private clustering pipeline")
    _add_privacy_flags(p)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--dump-ledger", default=None, metavar="PATH",
                   help="write every noise draw as CSV for audit replays")

    p = subs.add_parser("refcc", help="non-private reference clustering")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--lambda", dest="lambda_", type=float, required=True)
    p.add_argument("--e-rem", default=None,
                   help="edge-list file of forced removals")
    p.add_argument("--no-light-singletons", action="store_true",
                   help="keep light vertices in their component's cluster")

    p = subs.add_parser("cost", help="objective value of a clustering")
    p.add_argument("--graph", required=True)
    p.add_argument("--clustering", required=True)

    p = subs.add_parser("opt", help="brute-force optimum (n <= 11)")
    p.add_argument("--graph", required=True)
    p.add_argument("--output", default=None,
                   help="write the witness clustering here")

    p = subs.add_parser("mpc", help="bulk-synchronous simulation")
    _add_privacy_flags(p)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mu", type=float, required=True,
                   help="per-machine memory exponent")
    p.add_argument("--a", type=float, default=mpc_mod.DEFAULT_SAMPLING_CONSTANT,
                   help="sampling constant")
    p.add_argument("--budget-slack", type=float,
                   default=mpc_mod.DEFAULT_BUDGET_SLACK)
    p.add_argument("--calibrate", type=int, default=None, metavar="TRIALS",
                   help="sweep the sampling constant instead of clustering")
    p.add_argument("--a-grid", default="5,10,20,30,50",
                   help="comma-separated sweep values for --calibrate")

    p = subs.add_parser("gen", help="instance generators")
    p.add_argument("--kind", choices=["planted", "er", "matching"],
                   required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--clusters", type=int, default=None)
    p.add_argument("--cluster-size", type=int, default=None)
    p.add_argument("--flip-p", type=float, default=0.0)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--pairs", type=int, default=None,
                   help="matching size m (bits drawn uniformly)")
    p.add_argument("--bits", default=None,
                   help="explicit 0/1 string for the matching instance")

    p = subs.add_parser("audit", help="empirical step-level privacy audit")
    _add_privacy_flags(p)
    p.add_argument("--step", required=True,
                   choices=["noised-degree", "agreement", "lightness"])
    p.add_argument("--graph", required=True)
    p.add_argument("--graph-prime", required=True)
    p.add_argument("--target", required=True,
                   help="vertex, vertex pair 'u,v', or edge 'u,v'")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--slack", type=float, default=0.05)

    p = subs.add_parser("bench", help="acceptance experiments, one CSV each")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--criteria", default=None,
                   help="comma-separated subset, default all")

    return parser


def _load_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh)


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _derive_from_args(args, n_hint=None):
    return derive(args.epsilon, args.delta, args.beta, args.lambda_,
                  args.beta_prime, args.lambda_prime,
                  noise_multiplier=getattr(args, "noise_scale", 1.0),
                  t0_override=getattr(args, "t0_override", None),
                  n_hint=n_hint)


def _clustering_header(params, seed=None):
    header = {"epsilon": params.epsilon, "delta": params.delta,
              "beta": params.beta, "lambda": params.lambda_,
              "noise_multiplier": params.noise_multiplier,
              "t0": params.t0_effective}
    if seed is not None:
        header["seed"] = seed
    banners = (NON_PRIVATE_BANNER,) if params.non_private else ()
    return header, banners


def _cmd_params(args):
    params = _derive_from_args(args, n_hint=args.n_hint)
    _emit_json(params.as_dict())
    return 0


def _cmd_cluster(args):
    params = _derive_from_args(args)
    g = _load_graph(args.input)
    clustering, trace = run(g, params, args.seed)
    header, banners = _clustering_header(params, args.seed)
    with open(args.output, "w", encoding="utf-8") as fh:
        write_clustering(clustering, fh, header, banners)
    trace_payload = {"params": params.as_dict(), "seed": args.seed,
                     "non_private": params.non_private,
                     "summary": trace.summary()}
    if params.non_private:
        trace_payload["banner"] = NON_PRIVATE_BANNER
    with open(args.output + ".trace.json", "w", encoding="utf-8") as fh:
        json.dump(trace_payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    if args.dump_ledger:
        with open(args.dump_ledger, "w", newline="", encoding="utf-8") as fh:
            trace.ledger.dump_csv(fh)
    return 0


def _cmd_refcc(args):
    g = _load_graph(args.input)
    e_rem = frozenset()
    if args.e_rem:
        e_rem = frozenset(map(tuple, _load_graph(args.e_rem).edge_array()))
    vectors = AgreementVectors(beta=args.beta, lambda_=args.lambda_,
                               e_rem=e_rem)
    algorithm = alg_cc_prime if args.no_light_singletons else alg_cc
    clustering = algorithm(g, vectors)
    header = {"beta": args.beta, "lambda": args.lambda_,
              "e_rem_size": len(e_rem)}
    with open(args.output, "w", encoding="utf-8") as fh:
        write_clustering(clustering, fh, header, (REFERENCE_BANNER,))
    return 0


def _cmd_cost(args):
    g = _load_graph(args.graph)
    with open(args.clustering, "r", encoding="utf-8") as fh:
        clustering = parse_clustering(fh)
    report = cost(g, clustering)
    _emit_json({"total": report.total, "plus_cut": report.plus_cut,
                "minus_within": report.minus_within})
    return 0


def _cmd_opt(args):
    g = _load_graph(args.graph)
    report, witness = brute_force_opt(g, workers=max(1, args.threads))
    payload = {"total": report.total, "plus_cut": report.plus_cut,
               "minus_within": report.minus_within,
               "assignment": witness.assignment.tolist()}
    _emit_json(payload)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            write_clustering(witness, fh, {"optimum": report.total})
    return 0


def _cmd_mpc(args):
    params = _derive_from_args(args)
    g = _load_graph(args.input)
    if args.calibrate is not None:
        grid = [float(x) for x in args.a_grid.split(",") if x]
        _emit_json(mpc_mod.calibrate_a(g, params, grid, args.calibrate,
                                       args.seed))
        return 0
    clustering, stats = mpc_mod.simulate(
        g, params, args.mu, a=args.a, seed=args.seed,
        budget_slack=args.budget_slack)
    header, banners = _clustering_header(params, args.seed)
    with open(args.output, "w", encoding="utf-8") as fh:
        write_clustering(clustering, fh, header, banners)
    payload = {"stats": stats.as_dict(), "params": params.as_dict(),
               "seed": args.seed, "non_private": params.non_private}
    if params.non_private:
        payload["banner"] = NON_PRIVATE_BANNER
    with open(args.output + ".stats.json", "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


def _cmd_gen(args):
    if args.kind == "planted":
        if args.clusters is None or args.cluster_size is None:
            raise ParameterError("planted requires --clusters and "
                                 "--cluster-size")
        g, truth, flips = planted(PlantedSpec(args.clusters,
                                              args.cluster_size,
                                              args.flip_p, args.seed))
        with open(args.output, "w", encoding="utf-8") as fh:
            dump_edge_list(g, fh)
        with open(args.output + ".truth", "w", encoding="utf-8") as fh:
            write_clustering(truth, fh, {"planted_cost": flips})
        return 0
    if args.kind == "er":
        if args.n is None or args.p is None:
            raise ParameterError("er requires --n and --p")
        g = er_signed(args.n, args.p, args.seed)
    else:
        if args.bits is not None:
            tau = np.array([int(c) for c in args.bits], dtype=np.int64)
        elif args.pairs is not None:
            tau = np.random.default_rng(args.seed).integers(0, 2, args.pairs)
        else:
            raise ParameterError("matching requires --bits or --pairs")
        g = matching_instance(tau)
    with open(args.output, "w", encoding="utf-8") as fh:
        dump_edge_list(g, fh)
    return 0


def _cmd_audit(args):
    params = _derive_from_args(args)
    g = _load_graph(args.graph)
    g_prime = _load_graph(args.graph_prime)
    target = tuple(int(x) for x in args.target.split(","))
    report = audit_step(args.step, g, g_prime,
                        target if len(target) > 1 else target[0],
                        args.trials, args.seed, params,
                        alpha=args.alpha, slack=args.slack)
    _emit_json(report.as_dict())
    return 0


def _cmd_bench(args):
    numbers = sorted(bench_mod.CRITERIA) if args.criteria is None else \
        [int(x) for x in args.criteria.split(",")]
    os.makedirs(args.out_dir, exist_ok=True)
    all_ok = True
    for num in numbers:
        result = bench_mod.run_criterion(num)
        all_ok &= result["passed"]
        path = os.path.join(args.out_dir,
                            f"criterion_{num:02d}_{result['name']}.csv")
        rows = result["rows"]
        fields = sorted({key for row in rows for key in row})
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields)
            writer.writeheader()
            writer.writerows(rows)
        status = "PASS" if result["passed"] else "FAIL"
        print(f"criterion {num:2d} {result['name']}: {status}: "
              f"{result['detail']}")
    return 0 if all_ok else 1


_COMMANDS = {
    "params": _cmd_params, "cluster": _cmd_cluster, "refcc": _cmd_refcc,
    "cost": _cmd_cost, "opt": _cmd_opt, "mpc": _cmd_mpc, "gen": _cmd_gen,
    "audit": _cmd_audit, "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ParameterError, EdgeListParseError, ValueError) as exc:
        sys.stderr.write(f"privcc: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"privcc: i/o error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
