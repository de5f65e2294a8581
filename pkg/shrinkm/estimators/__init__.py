from .estimate import (Diagnostics, EstimateOptions, Method,
                       ShrinkageEstimate, estimate)
from .mestimator import (DEFAULT_MAX_ITER, DEFAULT_TOL, DOF_CAP, DOF_FLOOR,
                         SolveReport, estimate_t_dof, m_estimate, scm, shrink,
                         weighted_scm)
from .statistics import (KAPPA_FLOOR_MARGIN, kappa_hat, kappa_lower_bound,
                         lw_beta, psi1_hat, sign_covariance, sphericity_hat)
from .theory import (MseCoefficients, beta_app, beta_from_moments, beta_gauss,
                     lemma_moments, mse_at_optimum, mse_coefficients)

__all__ = [
    "DEFAULT_MAX_ITER",
    "DEFAULT_TOL",
    "DOF_CAP",
    "DOF_FLOOR",
    "KAPPA_FLOOR_MARGIN",
    "Diagnostics",
    "EstimateOptions",
    "Method",
    "MseCoefficients",
    "ShrinkageEstimate",
    "SolveReport",
    "beta_app",
    "beta_from_moments",
    "beta_gauss",
    "estimate",
    "estimate_t_dof",
    "kappa_hat",
    "kappa_lower_bound",
    "lemma_moments",
    "lw_beta",
    "m_estimate",
    "mse_at_optimum",
    "mse_coefficients",
    "psi1_hat",
    "scm",
    "shrink",
    "sign_covariance",
    "sphericity_hat",
    "weighted_scm",
]
