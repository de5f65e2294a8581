import numpy as np
from typing_extensions import Self, override

from shrinkm.utils import Vector

from .base import WeightKind, WeightSpec


class GaussianWeight(WeightSpec):
    """u(t) = 1; the M-estimator is the sample covariance matrix."""

    kind = WeightKind.GAUSSIAN

    @classmethod
    def of(cls, dim: int) -> Self:
        return cls(dim)

    @override
    def u(self, t: Vector) -> Vector:
        return np.ones_like(t)

    @override
    def psi(self, t: Vector) -> Vector:
        return np.array(t, dtype=np.float64)

    def __repr__(self) -> str:
        return f"GaussianWeight(p={self.dim})"
