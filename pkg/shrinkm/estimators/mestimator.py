from __future__ import annotations

import logging
from typing import NamedTuple

import numpy as np

from shrinkm.base import (DataSample, DimensionMismatchError, DomainError,
                          ScatterMatrix, SingularMatrixError)
from shrinkm.utils import Matrix, Vector
from shrinkm.weights import WeightSpec

from .statistics import kappa_hat

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-7
DEFAULT_MAX_ITER = 500
DOF_FLOOR = 2.5
DOF_CAP = 1000.0


class SolveReport(NamedTuple):
    iterations: int
    final_relative_change: float
    converged: bool


def weighted_scm(rows: Matrix, weights: Vector) -> Matrix:
    """(1/n) Σ wᵢ xᵢ xᵢᵀ."""
    return (rows * weights[:, None]).T @ rows / rows.shape[0]


def scm(data: DataSample) -> ScatterMatrix:
    """Sample covariance matrix (1/n) Σ xᵢ xᵢᵀ of zero-mean data.

    Raises:
        InsufficientSamplesError: If n <= p.
        SingularMatrixError: If the SCM is not positive definite.
    """
    data.require_n_greater_than_p("SCM")
    return ScatterMatrix.of(weighted_scm(data.rows, np.ones(data.n)))


def _initial_scatter(data: DataSample) -> ScatterMatrix:
    try:
        return scm(data)
    except SingularMatrixError:
        scale = float(np.mean(np.sum(data.rows**2, axis=1))) / data.p
        logger.warning("SCM is singular, starting from %.4g * I", scale)
        return ScatterMatrix.identity(data.p, scale)


def m_estimate(
    data: DataSample,
    w: WeightSpec,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[ScatterMatrix, SolveReport]:
    """Solves M = (1/n) Σ u(xᵢᵀ M⁻¹ xᵢ) xᵢ xᵢᵀ by fixed-point iteration.

    Starts from the SCM and stops once the relative Frobenius change of one
    step is at most `tol`. Running out of iterations is reported, not raised.

    Raises:
        InsufficientSamplesError: If n <= p.
        SingularMatrixError: If an iterate is singular, which usually means
            the data violate the existence condition of the M-estimator.
    """
    data.require_n_greater_than_p("M-estimation")
    if w.dim != data.p:
        raise DimensionMismatchError(
            f"Weight for p={w.dim} applied to data with p={data.p}")
    if not tol > 0 or max_iter < 1:
        raise DomainError(f"Invalid solver budget: tol={tol}, "
                          f"max_iter={max_iter}")

    x = data.rows
    current = _initial_scatter(data)
    change = np.inf
    for k in range(1, max_iter + 1):
        weights = w.u(current.quad_forms(x))
        try:
            updated = ScatterMatrix.of(weighted_scm(x, weights))
        except SingularMatrixError as e:
            raise SingularMatrixError(
                f"Iterate {k} of {w!r} is singular; the data likely violate "
                f"the Kent-Tyler existence condition") from e
        change = np.sqrt(updated.distance_sq(current) / current.frobenius_sq)
        current = updated
        if change <= tol:
            logger.debug("%r converged in %d iterations", w, k)
            return current, SolveReport(k, float(change), True)

    logger.warning("%r did not converge in %d iterations (change %.3g)", w,
                   max_iter, change)
    return current, SolveReport(max_iter, float(change), False)


def estimate_t_dof(data: DataSample) -> float:
    """Estimates ν of a t-distribution by inverting κ = 2/(ν − 4).

    Uses the marginal-kurtosis estimate κ̂; non-positive κ̂ maps to the
    Gaussian-like cap. The result lies in [DOF_FLOOR, DOF_CAP].
    """
    data.require_n_greater_than_p("t-dof estimation")
    kappa = kappa_hat(data)
    nu = 2 / kappa + 4 if kappa > 0 else DOF_CAP
    return min(max(nu, DOF_FLOOR), DOF_CAP)


def shrink(m: ScatterMatrix, beta: float) -> ScatterMatrix:
    """β·M + (1 − β)·(tr(M)/p)·I; keeps the trace and eigenvectors of M."""
    if not 0 <= beta <= 1:
        raise DomainError(f"Shrinkage parameter must lie in [0, 1]: {beta}")
    target = m.scale * np.eye(m.dim)
    return ScatterMatrix.of(beta * m.entries + (1 - beta) * target)
