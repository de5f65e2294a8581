from __future__ import annotations

import logging
import math
from typing import Callable, NamedTuple, Sequence

import numpy as np
import scipy.integrate as si
from scipy.optimize import brentq

from shrinkm.base import (BracketError, DataSample, DimensionMismatchError,
                          ScatterMatrix)
from shrinkm.estimators import shrink, weighted_scm
from shrinkm.weights import HuberWeight, WeightKind, WeightSpec

from .model import EllipticalModel

logger = logging.getLogger(__name__)

SIGMA_BRACKET = (1e-3, 1e3)
_QUAD_TOL = 1e-11
_QUANTILES = (1e-6, 1e-3, 0.5, 0.999)


class PopulationOracle(NamedTuple):
    """M-functional Λ₀ = σΛ of a weight under an elliptical model."""

    sigma: float
    m_functional: ScatterMatrix
    gamma: float
    kappa: float
    psi1: float


def radial_expectation(
    model: EllipticalModel,
    func: Callable[[float], float],
    breakpoints: Sequence[float] = (),
) -> float:
    """E[func(r)] for r = xᵀΛ⁻¹x by adaptive quadrature.

    The half-line is split at a few quantiles of r and at `breakpoints`
    (kinks of `func`).
    """
    radial = model.radial()
    cuts = {float(c) for c in radial.ppf(_QUANTILES)}
    cuts.update(float(b) for b in breakpoints if b > 0)
    edges = [0.0, *sorted(cuts), math.inf]

    def integrand(r: float) -> float:
        return func(r) * radial.pdf(r)

    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, _ = si.quad(integrand, lo, hi, epsabs=_QUAD_TOL,
                           epsrel=_QUAD_TOL, limit=200)
        total += value
    return total


def _kinks(w: WeightSpec, sigma: float) -> tuple[float, ...]:
    if isinstance(w, HuberWeight):
        return (sigma * w.c_squared,)
    return ()


def psi_expectation(model: EllipticalModel, w: WeightSpec,
                    sigma: float) -> float:
    """E[ψ(r/σ)]."""
    return radial_expectation(model, lambda r: float(w.psi(r / sigma)),
                              _kinks(w, sigma))


def solve_sigma(model: EllipticalModel, w: WeightSpec) -> float:
    """σ > 0 solving E[ψ(xᵀΛ⁻¹x/σ)] = p.

    Raises:
        BracketError: If the root is not bracketed by SIGMA_BRACKET.
    """
    p = model.dim
    if w.dim != p:
        raise DimensionMismatchError(
            f"Weight for p={w.dim} with a model of p={p}")
    if w.kind is WeightKind.GAUSSIAN:
        return float(model.radial().mean()) / p

    def excess(sigma: float) -> float:
        return psi_expectation(model, w, sigma) - p

    lo, hi = SIGMA_BRACKET
    f_lo, f_hi = excess(lo), excess(hi)
    if not f_lo >= 0 >= f_hi:
        raise BracketError(
            f"sigma equation of {w!r} not bracketed on [{lo}, {hi}]: "
            f"excess {f_lo:.3g} .. {f_hi:.3g}")
    sigma = brentq(excess, lo, hi, xtol=1e-14, rtol=1e-14, maxiter=200)
    logger.debug("sigma(%r, %r) = %.12g", w, model, sigma)
    return float(sigma)


def population_psi1(model: EllipticalModel,
                    w: WeightSpec,
                    sigma: float | None = None) -> float:
    """ψ₁ = E[ψ(r/σ)²]/(p(p+2)); infinite when the moment does not exist."""
    p = model.dim
    if sigma is None:
        sigma = solve_sigma(model, w)
    if w.kind is WeightKind.GAUSSIAN:
        second = float(model.radial().moment(2))
        if not np.isfinite(second):
            return math.inf
        return second / (sigma**2 * p * (p + 2))
    value = radial_expectation(model, lambda r: float(w.psi(r / sigma))**2,
                               _kinks(w, sigma))
    return value / (p * (p + 2))


def m_functional(model: EllipticalModel, w: WeightSpec) -> PopulationOracle:
    sigma = solve_sigma(model, w)
    return PopulationOracle(
        sigma=sigma,
        m_functional=model.covariance.scaled(sigma),
        gamma=model.covariance.sphericity,
        kappa=model.family.kappa,
        psi1=population_psi1(model, w, sigma),
    )


def one_step_c(data: DataSample, oracle: PopulationOracle,
               w: WeightSpec) -> ScatterMatrix:
    """C = (1/n) Σ u(xᵢᵀ Λ₀⁻¹ xᵢ) xᵢ xᵢᵀ, an unbiased estimator of Λ₀."""
    m0 = oracle.m_functional
    if data.p != m0.dim or w.dim != m0.dim:
        raise DimensionMismatchError(
            f"Data of dimension {data.p} against an oracle of "
            f"dimension {m0.dim}")
    weights = w.u(m0.quad_forms(data.rows))
    return ScatterMatrix.of(weighted_scm(data.rows, weights))


def shrunk_one_step(c: ScatterMatrix, beta: float) -> ScatterMatrix:
    """C_β = β·C + (1 − β)·(tr(C)/p)·I."""
    return shrink(c, beta)
