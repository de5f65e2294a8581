from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Any, NamedTuple, Sequence

import numpy as np
import scipy

from shrinkm._version import __version__
from shrinkm.base import ScatterMatrix, ShrinkageError
from shrinkm.elliptical import EllipticalModel, PopulationOracle, m_functional
from shrinkm.estimators import DOF_CAP, Method, estimate
from shrinkm.utils import PathLike
from shrinkm.weights import (GaussianWeight, HuberWeight, TMleWeight,
                             WeightSpec)

from .config import ExperimentConfig

logger = logging.getLogger(__name__)

CSV_HEADER = ("estimator", "n", "nmse_mean", "nmse_se", "beta_mean",
              "beta_se", "failures")


class ResultRow(NamedTuple):
    estimator: Method
    n: int
    nmse_mean: float
    nmse_se: float
    beta_mean: float
    beta_se: float
    failures: int

    def to_csv(self) -> list[str]:
        return [
            self.estimator.value,
            str(self.n),
            _fmt(self.nmse_mean),
            _fmt(self.nmse_se),
            _fmt(self.beta_mean),
            _fmt(self.beta_se),
            str(self.failures),
        ]


def _fmt(value: float) -> str:
    return "nan" if math.isnan(value) else repr(float(value))


def nmse(estimate: ScatterMatrix, oracle_m0: ScatterMatrix) -> float:
    """‖M̂ − Λ₀‖²_F / ‖Λ₀‖²_F."""
    return estimate.distance_sq(oracle_m0) / oracle_m0.frobenius_sq


def target_weight(method: Method, model: EllipticalModel,
                  huber_q: float) -> WeightSpec:
    """Weight whose M-functional an estimator is scored against.

    The t-MLE is scored at the population ν (the cap for the normal).
    """
    p = model.dim
    if method is Method.HUBER:
        return HuberWeight.of(p, huber_q)
    if method is Method.TMLE:
        return TMleWeight.of(p, model.family.dof or DOF_CAP)
    return GaussianWeight.of(p)


class TrialTask(NamedTuple):
    model: EllipticalModel
    n: int
    seed: np.random.SeedSequence
    estimators: tuple[Method, ...]
    targets: tuple[ScatterMatrix, ...]
    huber_q: float


def trial_seed(root_seed: int, n: int, trial: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(root_seed, spawn_key=(n, trial))


def run_trial(task: TrialTask) -> list[tuple[float, float]]:
    """(NMSE, β) of every estimator on one sample; NaN marks a failure."""
    data = task.model.sample(task.n, task.seed)
    out = []
    for method, target in zip(task.estimators, task.targets):
        try:
            result = estimate(data, method, huber_q=task.huber_q)
        except ShrinkageError as e:
            logger.debug("%s failed at n=%d: %s", method.value, task.n, e)
            out.append((math.nan, math.nan))
            continue
        out.append((nmse(result.matrix, target), result.beta))
    return out


def _mean_se(values: np.ndarray) -> tuple[float, float]:
    ok = values[~np.isnan(values)]
    if ok.size == 0:
        return math.nan, math.nan
    se = float(np.std(ok, ddof=1) / np.sqrt(ok.size)) if ok.size > 1 \
        else math.nan
    return float(np.mean(ok)), se


class ExperimentResult:
    """Per (estimator, n) aggregates of a Monte-Carlo sweep.

    Attributes:
        config: the configuration that produced the result.
        rows: one row per (n, estimator), in grid order.
        oracles: population M-functional each estimator is scored against.
        weights: the target weight of each estimator.
    """

    def __init__(
        self,
        config: ExperimentConfig,
        rows: Sequence[ResultRow],
        oracles: dict[Method, PopulationOracle],
        weights: dict[Method, WeightSpec],
    ) -> None:
        self.config = config
        self.rows = list(rows)
        self.oracles = oracles
        self.weights = weights

    def row(self, method: Method | str, n: int) -> ResultRow:
        method = Method.of(method)
        for row in self.rows:
            if row.estimator is method and row.n == n:
                return row
        raise KeyError(f"No result for {method.value} at n={n}")

    def write_csv(self, path: PathLike) -> None:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            writer.writerows(row.to_csv() for row in self.rows)

    def manifest(self) -> dict[str, Any]:
        return {
            "library": "shrinkm",
            "version": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "config": self.config.to_dict(),
            "root_seed": self.config.root_seed,
            "sampler": "covariance parametrization, cov(x) = Lambda",
            "sigma": {m.value: o.sigma
                      for m, o in self.oracles.items()},
            "target_weights": {m.value: w.params()
                               for m, w in self.weights.items()},
        }

    def write_manifest(self, path: PathLike) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.manifest(), f, indent=2, sort_keys=True)
            f.write("\n")


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Runs every estimator on every trial of every sample size.

    Each estimator is scored against its own Λ₀ = σΛ. Trials are seeded
    from (root_seed, n, trial), so serial and parallel runs agree.
    """
    model = cfg.model()
    weights = {m: target_weight(m, model, cfg.huber_q) for m in cfg.estimators}
    oracles = {m: m_functional(model, w) for m, w in weights.items()}
    targets = tuple(oracles[m].m_functional for m in cfg.estimators)
    for method, oracle in oracles.items():
        logger.info("target of %s: sigma=%.6g", method.value, oracle.sigma)

    executor = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    rows = []
    try:
        for n in cfg.n_grid:
            tasks = [
                TrialTask(model, n, trial_seed(cfg.root_seed, n, trial),
                          cfg.estimators, targets, cfg.huber_q)
                for trial in range(cfg.trials)
            ]
            if executor is None:
                results = list(map(run_trial, tasks))
            else:
                chunk = max(1, cfg.trials // (4 * cfg.workers))
                results = list(executor.map(run_trial, tasks,
                                            chunksize=chunk))
            values = np.array(results, dtype=np.float64)
            for j, method in enumerate(cfg.estimators):
                errors, betas = values[:, j, 0], values[:, j, 1]
                failures = int(np.sum(np.isnan(errors)))
                rows.append(
                    ResultRow(method, n, *_mean_se(errors), *_mean_se(betas),
                              failures))
            logger.info("n=%d done (%d trials)", n, cfg.trials)
    finally:
        if executor is not None:
            executor.shutdown()
    return ExperimentResult(cfg, rows, oracles, weights)
