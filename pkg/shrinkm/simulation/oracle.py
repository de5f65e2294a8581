"""Brute-force MSE of the shrunk 1-step estimator over a β grid."""
from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from shrinkm.base import DomainError
from shrinkm.elliptical import (EllipticalModel, PopulationOracle,
                                m_functional, one_step_c)
from shrinkm.estimators import beta_app
from shrinkm.utils import Vector
from shrinkm.weights import WeightSpec


class OneStepDraws(NamedTuple):
    """Per-trial statistics of C with A = C − Λ₀ and B = (tr(C)/p)I − Λ₀.

    The loss of C_β on a trial is β²‖A‖² + (1−β)²‖B‖² + 2β(1−β)⟨A, B⟩.
    """

    oracle: PopulationOracle
    n: int
    tr_c2: Vector
    tr_c_sq: Vector
    a_sq: Vector
    b_sq: Vector
    ab: Vector

    @property
    def trials(self) -> int:
        return self.tr_c2.size

    def losses(self, betas: Sequence[float]) -> np.ndarray:
        """(trials, len(betas)) matrix of ‖C_β − Λ₀‖²."""
        b = np.asarray(betas, dtype=np.float64)[None, :]
        return (b**2 * self.a_sq[:, None] + (1 - b)**2 * self.b_sq[:, None] +
                2 * b * (1 - b) * self.ab[:, None])


def draw_one_step(
    model: EllipticalModel,
    w: WeightSpec,
    n: int,
    trials: int,
    seed: int = 0,
    oracle: PopulationOracle | None = None,
) -> OneStepDraws:
    if trials < 2:
        raise DomainError(f"Need at least two trials: {trials}")
    oracle = oracle or m_functional(model, w)
    m0 = oracle.m_functional.entries
    p = model.dim
    stats = np.empty((trials, 5))
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        c = one_step_c(model.sample(n, child), oracle, w).entries
        a = c - m0
        b = np.trace(c) / p * np.eye(p) - m0
        stats[i] = (np.sum(c**2), np.trace(c)**2, np.sum(a**2),
                    np.sum(b**2), np.sum(a * b))
    return OneStepDraws(oracle, n, *stats.T)


def oracle_beta(model: EllipticalModel,
                w: WeightSpec,
                n: int,
                oracle: PopulationOracle | None = None) -> float:
    """Closed-form β_o^app from the population γ and ψ₁."""
    oracle = oracle or m_functional(model, w)
    return beta_app(oracle.gamma, oracle.psi1, n, model.dim)


def beta_grid(step: float = 0.02) -> Vector:
    if not 0 < step <= 1:
        raise DomainError(f"Grid step must lie in (0, 1]: {step}")
    return np.linspace(0.0, 1.0, int(round(1 / step)) + 1)


class OracleGrid(NamedTuple):
    beta_star: float
    mse_curve: Vector
    grid: Vector
    mse_se: Vector
    closed_form: float


def oracle_beta_grid(
    model: EllipticalModel,
    w: WeightSpec,
    n: int,
    trials: int,
    grid: Sequence[float] | None = None,
    seed: int = 0,
) -> OracleGrid:
    """Grid minimiser of the Monte-Carlo MSE of C_β.

    Returns the minimiser with the whole curve, its standard errors and
    the closed-form β it should agree with.
    """
    betas = beta_grid() if grid is None else np.asarray(grid, np.float64)
    if betas.size == 0 or betas.min() < 0 or betas.max() > 1:
        raise DomainError("The β grid must be a non-empty subset of [0, 1]")
    draws = draw_one_step(model, w, n, trials, seed)
    losses = draws.losses(betas)
    curve = losses.mean(axis=0)
    se = losses.std(axis=0, ddof=1) / np.sqrt(trials)
    return OracleGrid(
        beta_star=float(betas[np.argmin(curve)]),
        mse_curve=curve,
        grid=betas,
        mse_se=se,
        closed_form=oracle_beta(model, w, n, draws.oracle),
    )
