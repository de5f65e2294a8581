from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple

import numpy as np
import scipy.linalg as sla
import scipy.stats as st
from typing_extensions import Self

from shrinkm.base import DataSample, DomainError, ScatterMatrix
from shrinkm.utils import Seed


class FamilyKind(Enum):
    MVN = "mvn"
    T = "t"


class Family(NamedTuple):
    """Elliptical family: multivariate normal or t with `dof` > 2."""

    kind: FamilyKind
    dof: float | None = None

    @classmethod
    def mvn(cls) -> Self:
        return cls(FamilyKind.MVN)

    @classmethod
    def t(cls, dof: float) -> Self:
        if not dof > 2:
            raise DomainError(
                f"t family needs dof > 2 for a finite covariance: {dof}")
        return cls(FamilyKind.T, float(dof))

    @classmethod
    def of(cls, name: str, dof: float | None = None) -> Self:
        """Parses "mvn", "t" (with `dof`) or the shorthand "t5"."""
        key = name.strip().lower()
        if key in ("mvn", "normal", "gaussian"):
            return cls.mvn()
        if key.startswith("t"):
            if len(key) > 1:
                try:
                    dof = float(key[1:])
                except ValueError:
                    raise DomainError(f"Unknown family {name!r}") from None
            if dof is None:
                raise DomainError("t family needs a dof value")
            return cls.t(dof)
        raise DomainError(f"Unknown family {name!r}, expected mvn or t")

    @property
    def kappa(self) -> float:
        """Elliptical kurtosis; infinite for t with dof <= 4."""
        if self.kind is FamilyKind.MVN:
            return 0.0
        return 2 / (self.dof - 4) if self.dof > 4 else math.inf

    def __str__(self) -> str:
        if self.kind is FamilyKind.MVN:
            return "mvn"
        return f"t{self.dof:g}"


def ar1_scatter(p: int, rho: float, eta: float) -> ScatterMatrix:
    """AR(1) Toeplitz matrix (Λ)ᵢⱼ = η·ρ^|i−j|, with tr(Λ) = p·η."""
    if p < 1:
        raise DomainError(f"Dimension must be >= 1: {p}")
    if not 0 <= rho < 1:
        raise DomainError(f"AR(1) correlation must lie in [0, 1): {rho}")
    if not eta > 0:
        raise DomainError(f"AR(1) scale must be positive: {eta}")
    return ScatterMatrix.of(eta * sla.toeplitz(rho**np.arange(p)))


def ar1_sphericity(p: int, rho: float) -> float:
    """Closed-form sphericity of an AR(1) matrix; independent of η."""
    k = np.arange(1, p)
    return float((p + 2 * np.sum((p - k) * rho**(2 * k))) / p)


class EllipticalModel:
    """Zero-mean elliptical population parametrized by its covariance.

    For the t family the scatter (density) matrix is ((ν−2)/ν)·Λ, so that
    cov(x) = Λ for every family.

    Attributes:
        family: MVN or t(ν).
        covariance: Λ = cov(x).
    """

    def __init__(self, family: Family, covariance: ScatterMatrix) -> None:
        self.family = family
        self.covariance = covariance

    @classmethod
    def of(cls, covariance: ScatterMatrix,
           family: Family | None = None) -> Self:
        return cls(family or Family.mvn(), covariance)

    @classmethod
    def ar1(
        cls,
        p: int,
        rho: float,
        eta: float = 1.0,
        family: Family | None = None,
    ) -> Self:
        return cls.of(ar1_scatter(p, rho, eta), family)

    @property
    def dim(self) -> int:
        return self.covariance.dim

    def radial(self) -> st.rv_continuous:
        """Distribution of r = xᵀ Λ⁻¹ x.

        χ²_p for the normal; ((ν−2)/ν)·p·F(p, ν) for the t.
        """
        p = self.dim
        if self.family.kind is FamilyKind.MVN:
            return st.chi2(p)
        nu = self.family.dof
        return st.f(p, nu, scale=(nu - 2) / nu * p)

    def sample(self, n: int, seed: Seed) -> DataSample:
        if n < 1:
            raise DomainError(f"Sample size must be >= 1: {n}")
        rng = np.random.default_rng(seed)
        z = rng.standard_normal((n, self.dim))
        x = z @ self.covariance.cholesky.T
        if self.family.kind is FamilyKind.T:
            nu = self.family.dof
            w = rng.chisquare(nu, size=n) / nu
            x *= np.sqrt((nu - 2) / nu / w)[:, None]
        return DataSample.of(x)

    def __repr__(self) -> str:
        return f"EllipticalModel({self.family}, p={self.dim})"


def sample(model: EllipticalModel, n: int, seed: Seed) -> DataSample:
    """Draws n observations; identical seeds give identical samples."""
    return model.sample(n, seed)
