from __future__ import annotations

import numpy as np
from typing_extensions import Self, override

from shrinkm.base import DomainError
from shrinkm.special import ChiSquared
from shrinkm.utils import Vector

from .base import WeightKind, WeightSpec


def huber_c_squared(p: int, q: float) -> float:
    """Threshold c² = F⁻¹_{χ²_p}(q)."""
    return ChiSquared.of(p).quantile(q)


def huber_b(p: int, c_squared: float) -> float:
    """Scaling b = F_{χ²_{p+2}}(c²) + c²(1 − F_{χ²_p}(c²))/p.

    Makes the Huber M-functional Fisher consistent at the normal model;
    equivalently b = E[min(t, c²)]/p with t ~ χ²_p.
    """
    if not c_squared > 0:
        raise DomainError(f"Huber threshold must be positive: {c_squared}")
    return (ChiSquared.of(p + 2).cdf(c_squared) +
            c_squared * ChiSquared.of(p).sf(c_squared) / p)


class HuberWeight(WeightSpec):
    """Huber's weight u(t) = min(1, c²/t)/b, with u(0) = 1/b.

    Attributes:
        q: quantile level defining the threshold.
        c_squared: threshold on the quadratic form.
        b: consistency factor.
    """

    kind = WeightKind.HUBER

    def __init__(self, dim: int, q: float, c_squared: float, b: float):
        super().__init__(dim)
        self.q = q
        self.c_squared = c_squared
        self.b = b

    @classmethod
    def of(cls, dim: int, q: float = 0.7) -> Self:
        c_squared = huber_c_squared(dim, q)
        return cls(dim, q, c_squared, huber_b(dim, c_squared))

    @override
    def u(self, t: Vector) -> Vector:
        return self.c_squared / (self.b * np.maximum(t, self.c_squared))

    @override
    def psi(self, t: Vector) -> Vector:
        return np.minimum(t, self.c_squared) / self.b

    @override
    def params(self) -> dict[str, float | str]:
        return {
            "kind": self.kind.value,
            "q": self.q,
            "c_squared": self.c_squared,
            "b": self.b,
        }

    def __repr__(self) -> str:
        return (f"HuberWeight(p={self.dim}, q={self.q}, "
                f"c2={self.c_squared:.6g}, b={self.b:.6g})")
