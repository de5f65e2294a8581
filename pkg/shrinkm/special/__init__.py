from .chi2 import ChiSquared, chi2_cdf, chi2_quantile
from .gamma import reg_lower_gamma, reg_upper_gamma

__all__ = [
    "ChiSquared",
    "chi2_cdf",
    "chi2_quantile",
    "reg_lower_gamma",
    "reg_upper_gamma",
]
