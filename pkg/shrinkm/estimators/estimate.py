from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from typing_extensions import Self, TypedDict, Unpack

from shrinkm.base import DataSample, ScatterMatrix, UnknownEstimatorError
from shrinkm.utils import Adaptive, adaptive
from shrinkm.weights import (GaussianWeight, HuberWeight, TMleWeight,
                             WeightSpec)

from .mestimator import (DEFAULT_MAX_ITER, DEFAULT_TOL, SolveReport,
                         estimate_t_dof, m_estimate, scm, shrink)
from .statistics import kappa_hat, lw_beta, psi1_hat, sphericity_hat
from .theory import beta_app, beta_gauss


class Method(Enum):
    GAUSS = "gauss"
    LW = "lw"
    HUBER = "huber"
    TMLE = "tmle"

    @classmethod
    def of(cls, name: str | Self) -> Self:
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise UnknownEstimatorError(
                f"Unknown estimator {name!r}, expected one of: {choices}"
            ) from None


class EstimateOptions(TypedDict, total=False):
    """Options of `estimate`.

    Fields:
        huber_q: quantile level of the Huber threshold (default 0.7)
        tmle_dof: fixed ν of the t weight, or `adaptive` (default)
        tol: relative Frobenius change stopping the fixed point
        max_iter: iteration budget of the fixed point
    """
    huber_q: float
    tmle_dof: float | Adaptive
    tol: float
    max_iter: int


class Diagnostics(NamedTuple):
    gamma_hat: float
    psi1_hat: float | None = None
    kappa_hat: float | None = None
    nu_hat: float | None = None
    solve_report: SolveReport | None = None


class ShrinkageEstimate(NamedTuple):
    """Shrunk scatter estimate shrink(M̂, β) with what produced it."""

    matrix: ScatterMatrix
    beta: float
    method: Method
    weight: WeightSpec
    diagnostics: Diagnostics


def _gauss(data: DataSample) -> ShrinkageEstimate:
    s = scm(data)
    gamma, kappa = sphericity_hat(data), kappa_hat(data)
    if gamma == 1.0:
        beta = 0.0
    elif data.p >= 3:
        beta = beta_gauss(gamma, kappa, data.n, data.p)
    else:
        beta = beta_app(gamma, 1 + kappa, data.n, data.p)
    return ShrinkageEstimate(shrink(s, beta), beta, Method.GAUSS,
                             GaussianWeight.of(data.p),
                             Diagnostics(gamma, kappa_hat=kappa))


def _lw(data: DataSample) -> ShrinkageEstimate:
    s = scm(data)
    beta = lw_beta(data)
    return ShrinkageEstimate(shrink(s, beta), beta, Method.LW,
                             GaussianWeight.of(data.p),
                             Diagnostics(sphericity_hat(data)))


def _robust(
    data: DataSample,
    method: Method,
    w: WeightSpec,
    nu: float | None,
    tol: float,
    max_iter: int,
) -> ShrinkageEstimate:
    m, report = m_estimate(data, w, tol, max_iter)
    gamma = sphericity_hat(data)
    psi1 = psi1_hat(data, m, w)
    # a spherical γ̂ (always so at p = 1) leaves nothing to shrink
    beta = 0.0 if gamma == 1.0 else beta_app(gamma, psi1, data.n, data.p)
    diagnostics = Diagnostics(gamma, psi1_hat=psi1, nu_hat=nu,
                              solve_report=report)
    return ShrinkageEstimate(shrink(m, beta), beta, method, w, diagnostics)


def estimate(
    data: DataSample,
    method: Method | str,
    **options: Unpack[EstimateOptions],
) -> ShrinkageEstimate:
    """Shrinkage estimate of scatter with automatically tuned β.

    gauss: SCM, β from the elliptical closed form with κ̂.
    lw:    SCM, Ledoit–Wolf β.
    huber: Huber M-estimator, β from γ̂ and ψ̂₁.
    tmle:  t-weight M-estimator (ν estimated unless fixed), β from γ̂, ψ̂₁.

    Raises:
        InsufficientSamplesError: If n <= p.
        UnknownEstimatorError: If the method tag is not recognised.
    """
    method = Method.of(method)
    data.require_n_greater_than_p("estimate")
    tol = options.get("tol", DEFAULT_TOL)
    max_iter = options.get("max_iter", DEFAULT_MAX_ITER)

    if method is Method.GAUSS:
        return _gauss(data)
    if method is Method.LW:
        return _lw(data)
    if method is Method.HUBER:
        w = HuberWeight.of(data.p, options.get("huber_q", 0.7))
        return _robust(data, method, w, None, tol, max_iter)

    w = TMleWeight.of(data.p, options.get("tmle_dof", adaptive))
    if not w.resolved:
        w = w.with_dof(estimate_t_dof(data))
    return _robust(data, method, w, float(w.dof), tol, max_iter)
