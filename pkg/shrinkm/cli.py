"""Command line interface: `shrinkm estimate | simulate | oracle | selftest`."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

from shrinkm.base import ShrinkageError
from shrinkm.csvio import read_matrix, write_matrix
from shrinkm.elliptical import EllipticalModel, Family
from shrinkm.estimators import (DEFAULT_MAX_ITER, DEFAULT_TOL,
                                EstimateOptions, Method, estimate)
from shrinkm.simulation import (ExperimentConfig, oracle_beta_grid,
                                run_experiment, run_selftest, target_weight)
from shrinkm.utils import Adaptive, adaptive

logger = logging.getLogger(__name__)


def _dof(value: str) -> float | Adaptive:
    if value.strip().lower() == "adaptive":
        return adaptive
    return float(value)


def _int_list(value: str) -> list[int]:
    return [int(v) for v in value.split(",") if v.strip()]


def _str_list(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _add_model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, help="dimension")
    parser.add_argument("--rho", type=float, help="AR(1) correlation")
    parser.add_argument("--eta", type=float, help="AR(1) scale tr/p")
    parser.add_argument("--family", help="mvn, t or tNU (e.g. t5)")
    parser.add_argument("--nu", type=float, help="dof of the t family")


def setup() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shrinkm",
        description="Shrinkage M-estimators of scatter with automatic "
        "shrinkage intensity.")
    parser.add_argument("-v",
                        "--verbose",
                        action="count",
                        default=0,
                        help="-v for progress, -vv for solver details")
    commands = parser.add_subparsers(dest="command", required=True)

    est = commands.add_parser("estimate", help="estimate scatter of a CSV")
    est.add_argument("input", type=Path, help="CSV, one observation per row")
    est.add_argument("--method",
                     default="huber",
                     help="gauss, lw, huber or tmle")
    est.add_argument("--skip-header", action="store_true")
    est.add_argument("--huber-q", type=float, default=0.7)
    est.add_argument("--nu",
                     type=_dof,
                     default=adaptive,
                     help="t-MLE dof or 'adaptive'")
    est.add_argument("--tol", type=float, default=DEFAULT_TOL)
    est.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    est.add_argument("--out", type=Path, help="write the matrix as CSV")
    est.set_defaults(func=cmd_estimate)

    sim = commands.add_parser("simulate", help="run a Monte-Carlo sweep")
    sim.add_argument("--config", type=Path, help="JSON experiment config")
    _add_model_flags(sim)
    sim.add_argument("--n-grid", type=_int_list, help="e.g. 60,100,140")
    sim.add_argument("--trials", type=int)
    sim.add_argument("--estimators", type=_str_list, help="e.g. gauss,lw")
    sim.add_argument("--huber-q", type=float)
    sim.add_argument("--seed", type=int)
    sim.add_argument("--workers", type=int)
    sim.add_argument("--out", type=Path, default=Path("results.csv"))
    sim.add_argument("--manifest",
                     type=Path,
                     help="defaults to <out>.manifest.json")
    sim.set_defaults(func=cmd_simulate)

    ora = commands.add_parser("oracle",
                              help="grid-search the oracle shrinkage")
    _add_model_flags(ora)
    ora.add_argument("--weight",
                     default="gauss",
                     help="gauss, huber or tmle")
    ora.add_argument("--huber-q", type=float, default=0.7)
    ora.add_argument("--n", type=int, required=True)
    ora.add_argument("--trials", type=int, default=2000)
    ora.add_argument("--seed", type=int, default=0)
    ora.add_argument("--out", type=Path, help="write the MSE curve as CSV")
    ora.set_defaults(func=cmd_oracle)

    chk = commands.add_parser("selftest",
                              help="Monte-Carlo checks of the closed forms")
    chk.add_argument("--p", type=int, default=5)
    chk.add_argument("--rho", type=float, default=0.6)
    chk.add_argument("--n", type=int, default=50)
    chk.add_argument("--trials", type=int, default=20000)
    chk.add_argument("--seed", type=int, default=0)
    chk.add_argument("--z", type=float, default=3.0)
    chk.set_defaults(func=cmd_selftest)
    return parser


def _opt(value: float | None, default: float) -> float:
    return default if value is None else value


def cmd_estimate(args: argparse.Namespace) -> int:
    data = read_matrix(args.input, args.skip_header)
    options = EstimateOptions(huber_q=args.huber_q,
                              tmle_dof=args.nu,
                              tol=args.tol,
                              max_iter=args.max_iter)
    result = estimate(data, args.method, **options)
    diag = result.diagnostics
    lines = [
        ("method", result.method.value),
        ("n", data.n),
        ("p", data.p),
        ("beta", repr(result.beta)),
        ("gamma_hat", repr(diag.gamma_hat)),
        ("psi1_hat", diag.psi1_hat),
        ("kappa_hat", diag.kappa_hat),
        ("nu_hat", diag.nu_hat),
    ]
    if diag.solve_report is not None:
        lines.append(("iterations", diag.solve_report.iterations))
        lines.append(("converged", diag.solve_report.converged))
    for key, value in lines:
        if value is not None:
            print(f"{key}: {value}")
    if args.out is not None:
        write_matrix(args.out, result.matrix.entries)
        logger.info("wrote %s", args.out)
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    overrides = dict(p=args.p,
                     rho=args.rho,
                     eta=args.eta,
                     family=args.family,
                     nu=args.nu,
                     n_grid=args.n_grid,
                     trials=args.trials,
                     estimators=args.estimators,
                     huber_q=args.huber_q,
                     seed=args.seed,
                     workers=args.workers)
    if args.config is not None:
        cfg = ExperimentConfig.from_file(args.config, **overrides)
    else:
        cfg = ExperimentConfig.from_dict({}, **overrides)
    logger.info("running %r", cfg)
    result = run_experiment(cfg)
    manifest = args.manifest or args.out.with_suffix(".manifest.json")
    result.write_csv(args.out)
    result.write_manifest(manifest)
    print(f"results: {args.out}")
    print(f"manifest: {manifest}")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    family = Family.of(args.family or "mvn", args.nu)
    model = EllipticalModel.ar1(args.p or 40, _opt(args.rho, 0.6),
                                _opt(args.eta, 1.0), family)
    w = target_weight(Method.of(args.weight), model, args.huber_q)
    grid = oracle_beta_grid(model, w, args.n, args.trials, seed=args.seed)
    print(f"weight: {w!r}")
    print(f"beta_star: {grid.beta_star!r}")
    print(f"closed_form: {grid.closed_form!r}")
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write("beta,mse,mse_se\n")
            for row in zip(grid.grid, grid.mse_curve, grid.mse_se):
                f.write(",".join(repr(float(v)) for v in row) + "\n")
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest(args.p, args.rho, args.n, args.trials, args.seed,
                           args.z)
    for check in results:
        print(check)
    failed = sum(not c.passed for c in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def main(argv: Sequence[str] | None = None) -> int:
    args = setup().parse_args(argv)
    level = (logging.WARNING, logging.INFO,
             logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s")
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except ShrinkageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
