from .base import WeightKind, WeightSpec, psi, weight_u
from .gaussian import GaussianWeight
from .huber import HuberWeight, huber_b, huber_c_squared
from .tmle import TMleWeight

__all__ = [
    "GaussianWeight",
    "HuberWeight",
    "TMleWeight",
    "WeightKind",
    "WeightSpec",
    "huber_b",
    "huber_c_squared",
    "psi",
    "weight_u",
]
