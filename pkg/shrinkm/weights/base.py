from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from typing import Callable, ClassVar

import numpy as np
import numpy.typing as npt
from typing_extensions import Concatenate, ParamSpec

from shrinkm.base import DomainError, UnresolvedWeightError
from shrinkm.utils import Vector

_P = ParamSpec("_P")


class WeightKind(Enum):
    GAUSSIAN = "gaussian"
    HUBER = "huber"
    TMLE = "tmle"


def as_quadratic_forms(t: npt.ArrayLike) -> Vector:
    """Validates quadratic-form values t >= 0 and returns them as an array."""
    arr = np.asarray(t, dtype=np.float64)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise DomainError("Weight functions are defined for t >= 0 only")
    return arr


def check_resolved(
    func: Callable[Concatenate[WeightSpec, _P], Vector]
) -> Callable[Concatenate[WeightSpec, _P], Vector]:

    def wrapper(
        self: WeightSpec,
        *args: _P.args,
        **kwargs: _P.kwargs,
    ) -> Vector:
        if not self.resolved:
            raise UnresolvedWeightError(
                f"{self!r} must be resolved against data before use")
        return func(self, *args, **kwargs)

    return wrapper


class WeightSpec(ABC):
    """Weight function u(t) of an M-estimator of scatter, bound to dimension p.

    Every weight is non-increasing in t and its ψ(t) = t·u(t) is
    non-decreasing. Constants depending on p are computed once at
    construction.

    Abstract Methods:
        u(t): weights at quadratic-form values t >= 0
    """

    kind: ClassVar[WeightKind]

    def __init__(self, dim: int) -> None:
        if dim < 1:
            raise DomainError(f"Weight dimension must be >= 1: {dim}")
        self.dim = dim

    @property
    def resolved(self) -> bool:
        return True

    @abstractmethod
    def u(self, t: Vector) -> Vector:
        raise NotImplementedError()

    def psi(self, t: Vector) -> Vector:
        return t * self.u(t)

    def params(self) -> dict[str, float | str]:
        """Parameters for reports and run manifests."""
        return {"kind": self.kind.value}


def weight_u(w: WeightSpec, t: npt.ArrayLike) -> Vector | float:
    arr = as_quadratic_forms(t)
    result = w.u(arr)
    return result if arr.ndim else float(result)


def psi(w: WeightSpec, t: npt.ArrayLike) -> Vector | float:
    arr = as_quadratic_forms(t)
    result = w.psi(arr)
    return result if arr.ndim else float(result)
