"""Monte-Carlo checks of the closed forms behind the oracle β."""
from __future__ import annotations

import logging
from typing import NamedTuple

import numpy as np

from shrinkm.elliptical import EllipticalModel
from shrinkm.estimators import (beta_from_moments, lemma_moments,
                                mse_at_optimum)
from shrinkm.weights import GaussianWeight, HuberWeight, WeightSpec

from .oracle import OneStepDraws, beta_grid, draw_one_step, oracle_beta

logger = logging.getLogger(__name__)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    observed: float
    expected: float
    tolerance: float

    def __str__(self) -> str:
        status = "ok" if self.passed else "FAIL"
        return (f"[{status}] {self.name}: observed={self.observed:.6g} "
                f"expected={self.expected:.6g} tol={self.tolerance:.3g}")


def _within(name: str, observed: float, expected: float,
            tolerance: float) -> CheckResult:
    passed = bool(abs(observed - expected) <= tolerance)
    return CheckResult(name, passed, float(observed), float(expected),
                       float(tolerance))


def _se(values: np.ndarray) -> float:
    return float(np.std(values, ddof=1) / np.sqrt(values.size))


def check_lemma_moments(draws: OneStepDraws,
                        z: float = 3.0) -> list[CheckResult]:
    """E[tr(C²)] and E[tr(C)²] against their closed forms."""
    oracle = draws.oracle
    e_tr_c2, e_tr_c_sq = lemma_moments(oracle.m_functional, oracle.psi1,
                                       draws.n)
    return [
        _within("E[tr(C^2)]", draws.tr_c2.mean(), e_tr_c2,
                z * _se(draws.tr_c2)),
        _within("E[tr(C)^2]", draws.tr_c_sq.mean(), e_tr_c_sq,
                z * _se(draws.tr_c_sq)),
    ]


def check_mse_at_optimum(draws: OneStepDraws, z: float = 3.0) -> CheckResult:
    oracle = draws.oracle
    m0 = oracle.m_functional
    e_tr_c2, e_tr_c_sq = lemma_moments(m0, oracle.psi1, draws.n)
    beta = beta_from_moments(m0, e_tr_c2, e_tr_c_sq)
    losses = draws.losses([beta])[:, 0]
    return _within("MSE(C_beta) at optimum", losses.mean(),
                   mse_at_optimum(m0, e_tr_c_sq, beta), z * _se(losses))


def check_oracle_equivalence(model: EllipticalModel, w: WeightSpec,
                             draws: OneStepDraws,
                             step: float = 0.02) -> CheckResult:
    """Grid minimiser of the empirical MSE within one step of β_o^app."""
    grid = beta_grid(step)
    curve = draws.losses(grid).mean(axis=0)
    return _within("grid beta vs closed form", grid[np.argmin(curve)],
                   oracle_beta(model, w, draws.n, draws.oracle), step)


def check_mse_convexity(draws: OneStepDraws,
                        step: float = 0.02) -> CheckResult:
    curve = draws.losses(beta_grid(step)).mean(axis=0)
    second = np.diff(curve, 2)
    slack = 1e-12 * float(np.max(np.abs(curve)))
    worst = float(second.min())
    return CheckResult("convexity of the MSE curve", worst >= -slack, worst,
                       0.0, slack)


def run_selftest(p: int = 5,
                 rho: float = 0.6,
                 n: int = 50,
                 trials: int = 20000,
                 seed: int = 0,
                 z: float = 3.0) -> list[CheckResult]:
    """Runs every check for the Gaussian and Huber weights on AR(1) data."""
    model = EllipticalModel.ar1(p, rho)
    results = []
    for w in (GaussianWeight.of(p), HuberWeight.of(p)):
        logger.info("selftest with %r, %d trials", w, trials)
        draws = draw_one_step(model, w, n, trials, seed)
        checks = [
            *check_lemma_moments(draws, z),
            check_mse_at_optimum(draws, z),
            check_oracle_equivalence(model, w, draws),
            check_mse_convexity(draws),
        ]
        results.extend(
            c._replace(name=f"{w.kind.value}: {c.name}") for c in checks)
    return results
