from __future__ import annotations

from typing_extensions import Self, override

from shrinkm.base import DomainError
from shrinkm.utils import Adaptive, Vector, adaptive

from .base import WeightKind, WeightSpec, check_resolved


class TMleWeight(WeightSpec):
    """t-MLE weight u(t) = (p + ν)/(ν + t).

    With `dof=adaptive` the weight is a placeholder until ν is estimated,
    see `shrinkm.estimators.estimate_t_dof`.

    Attributes:
        dof: degrees of freedom ν, or `adaptive`.
    """

    kind = WeightKind.TMLE

    def __init__(self, dim: int, dof: float | Adaptive) -> None:
        super().__init__(dim)
        self.dof = dof

    @classmethod
    def of(cls, dim: int, dof: float | Adaptive = adaptive) -> Self:
        if dof is not adaptive and not dof > 0:
            raise DomainError(f"t-weight dof must be positive: {dof}")
        return cls(dim, dof)

    @property
    @override
    def resolved(self) -> bool:
        return self.dof is not adaptive

    def with_dof(self, dof: float) -> Self:
        return self.of(self.dim, dof)

    @check_resolved
    @override
    def u(self, t: Vector) -> Vector:
        return (self.dim + self.dof) / (self.dof + t)

    @check_resolved
    @override
    def psi(self, t: Vector) -> Vector:
        return (self.dim + self.dof) * t / (self.dof + t)

    @override
    def params(self) -> dict[str, float | str]:
        dof = repr(self.dof) if self.dof is adaptive else self.dof
        return {"kind": self.kind.value, "dof": dof}

    def __repr__(self) -> str:
        return f"TMleWeight(p={self.dim}, dof={self.dof!r})"
