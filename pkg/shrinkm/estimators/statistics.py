"""Data-driven plug-ins for the shrinkage formulas."""
from __future__ import annotations

import numpy as np
import scipy.stats as st

from shrinkm.base import DataSample, DimensionMismatchError, DomainError
from shrinkm.base import ScatterMatrix
from shrinkm.weights import WeightSpec

KAPPA_FLOOR_MARGIN = 1e-3


def kappa_lower_bound(p: int) -> float:
    """Elliptical kurtosis satisfies κ > −2/(p + 2)."""
    return -2 / (p + 2)


def psi1_hat(data: DataSample, m: ScatterMatrix, w: WeightSpec) -> float:
    """ψ̂₁ = (1/n) Σ ψ(tᵢ)² / (p(p+2)) with tᵢ = xᵢᵀ M⁻¹ xᵢ.

    `m` should be the converged M-estimator of the same weight. The scale
    factor σ is not estimated.
    """
    if m.dim != data.p or w.dim != data.p:
        raise DimensionMismatchError(
            f"Data of dimension {data.p} with a {m.dim}-dimensional "
            f"matrix and a {w.dim}-dimensional weight")
    p = data.p
    values = w.psi(m.quad_forms(data.rows))
    return float(np.mean(values**2)) / (p * (p + 2))


def sign_covariance(data: DataSample) -> np.ndarray:
    """Spatial sign covariance (1/n) Σ sᵢ sᵢᵀ with sᵢ = xᵢ/‖xᵢ‖."""
    norms = np.linalg.norm(data.rows, axis=1)
    if np.any(norms == 0):
        raise DomainError("Sign covariance is undefined for zero rows")
    signs = data.rows / norms[:, None]
    return signs.T @ signs / data.n


def sphericity_hat(data: DataSample) -> float:
    """Sign-based estimate of γ = p·tr(Λ₀²)/tr(Λ₀)², clipped to [1, p].

    γ̂ = n/(n−1) · (p·tr(SGN²) − p/n), unbiased for spherical scatter; at
    small p the sign covariance compresses the spectrum, so γ̂ tends to sit
    slightly below γ.
    """
    n, p = data.n, data.p
    if n < 2:
        raise DomainError(f"Sphericity estimate needs n >= 2: n={n}")
    sgn = sign_covariance(data)
    gamma = n / (n - 1) * (p * float(np.sum(sgn**2)) - p / n)
    return min(max(gamma, 1.0), float(p))


def kappa_hat(data: DataSample) -> float:
    """Elliptical kurtosis estimate κ̂ = mean marginal excess kurtosis / 3.

    Floored just above the theoretical bound −2/(p+2).
    """
    if data.n < 4:
        raise DomainError(f"Kurtosis estimate needs n >= 4: n={data.n}")
    excess = st.kurtosis(data.rows, axis=0, fisher=True, bias=True)
    kappa = float(np.mean(excess)) / 3
    return max(kappa, kappa_lower_bound(data.p) + KAPPA_FLOOR_MARGIN)


def lw_beta(data: DataSample) -> float:
    """Ledoit–Wolf weight on the SCM for the scaled-identity target.

    Returns 1 − b̄²/d², or 0 when the SCM is exactly spherical.
    """
    n, p = data.n, data.p
    if n < 2:
        raise DomainError(f"Ledoit-Wolf shrinkage needs n >= 2: n={n}")
    x = data.rows
    s = x.T @ x / n
    m = np.trace(s) / p
    d2 = float(np.sum((s - m * np.eye(p))**2))
    if d2 == 0:
        return 0.0
    sq_norms = np.sum(x**2, axis=1)
    b2 = (float(np.sum(sq_norms**2)) - n * float(np.sum(s**2))) / n**2
    b2 = min(d2, max(b2, 0.0))
    return 1 - b2 / d2
