"""Closed forms for the MSE-optimal shrinkage of the 1-step estimator C.

L(β) = E‖C_β − Λ₀‖²_F is a convex quadratic in β. Its minimiser depends on
the data distribution only through E[tr(C²)] and E[tr(C)²]; under
elliptical sampling these reduce to the sphericity γ and the constant ψ₁.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from shrinkm.base import DomainError, ScatterMatrix

from .statistics import kappa_lower_bound

_BELOW_ONE = float(np.nextafter(1.0, 0.0))
_SLACK = 1e-12


def _clip_unit(beta: float) -> float:
    return min(max(beta, 0.0), _BELOW_ONE)


def _check_common(gamma: float, n: int, p: int, min_p: int) -> float:
    if p < min_p:
        raise DomainError(f"Shrinkage formula needs p >= {min_p}: p={p}")
    if n < 2:
        raise DomainError(f"Shrinkage formula needs n >= 2: n={n}")
    if not 1 - _SLACK <= gamma <= p * (1 + _SLACK):
        raise DomainError(f"Sphericity must lie in [1, p={p}]: {gamma}")
    return min(max(gamma, 1.0), float(p))


def beta_app(gamma: float, psi1: float, n: int, p: int) -> float:
    """β = (γ−1) / [(γ−1)(1−1/n) + ψ₁(1−1/p)(2γ+p)/n], in [0, 1).

    The result lies in [0, 1) whenever ψ₁ >= p/(p+2), which any
    M-estimating equation guarantees.
    """
    gamma = _check_common(gamma, n, p, 2)
    if not psi1 > 0:
        raise DomainError(f"psi1 must be positive: {psi1}")
    num = gamma - 1
    den = num * (1 - 1 / n) + psi1 * (1 - 1 / p) * (2 * gamma + p) / n
    return _clip_unit(num / den)


def beta_gauss(gamma: float, kappa: float, n: int, p: int) -> float:
    """Optimal weight of the shrinkage SCM: β = (γ−1)/(γ−1+a) with
    a = κ(2γ(1−1/p) + p − 1)/n + (γ(1−2/p) + p)/n.
    """
    gamma = _check_common(gamma, n, p, 3)
    if not kappa > kappa_lower_bound(p):
        raise DomainError(
            f"Elliptical kurtosis must exceed -2/(p+2) for p={p}: {kappa}")
    a = (kappa * (2 * gamma * (1 - 1 / p) + p - 1) / n +
         (gamma * (1 - 2 / p) + p) / n)
    return _clip_unit((gamma - 1) / (gamma - 1 + a))


class MseCoefficients(NamedTuple):
    """L(β) = β²·a1 + (1−β)²·a2 + 2β(1−β)·a3."""

    a1: float
    a2: float
    a3: float

    def mse(self, beta: float | np.ndarray) -> float | np.ndarray:
        return (beta**2 * self.a1 + (1 - beta)**2 * self.a2 +
                2 * beta * (1 - beta) * self.a3)

    @property
    def minimizer(self) -> float:
        return (self.a2 - self.a3) / ((self.a1 - self.a3) +
                                      (self.a2 - self.a3))


def mse_coefficients(m0: ScatterMatrix, e_tr_c2: float,
                     e_tr_c_sq: float) -> MseCoefficients:
    """Quadratic coefficients of L(β) from the two moments of C."""
    p = m0.dim
    eta0 = m0.scale
    a1 = e_tr_c2 - m0.frobenius_sq
    a3 = e_tr_c_sq / p - p * eta0**2
    a2 = a3 + p * (m0.sphericity - 1) * eta0**2
    return MseCoefficients(a1, a2, a3)


def beta_from_moments(m0: ScatterMatrix, e_tr_c2: float,
                      e_tr_c_sq: float) -> float:
    """β = p(γ−1)η₀² / (E[tr(C²)] − E[tr(C)²]/p), valid for any distribution.
    """
    p = m0.dim
    num = p * (m0.sphericity - 1) * m0.scale**2
    den = e_tr_c2 - e_tr_c_sq / p
    if not den > 0:
        raise DomainError(f"Moments give a non-positive denominator: {den}")
    return _clip_unit(num / den)


def lemma_moments(m0: ScatterMatrix, psi1: float,
                  n: int) -> tuple[float, float]:
    """(E[tr(C²)], E[tr(C)²]) under elliptical sampling."""
    tr2 = m0.frobenius_sq
    tr_sq = m0.trace**2
    e_tr_c2 = (1 + (2 * psi1 - 1) / n) * tr2 + psi1 / n * tr_sq
    e_tr_c_sq = 2 * psi1 / n * tr2 + (1 + (psi1 - 1) / n) * tr_sq
    return e_tr_c2, e_tr_c_sq


def mse_at_optimum(m0: ScatterMatrix, e_tr_c_sq: float, beta: float) -> float:
    """MSE of C_β at the optimal β."""
    p = m0.dim
    spread = p * (m0.sphericity - 1) * m0.scale**2
    return (e_tr_c_sq - m0.trace**2) / p + (1 - beta) * spread
