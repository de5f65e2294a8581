from __future__ import annotations

import numpy as np
import numpy.typing as npt
import scipy.linalg as sla
from typing_extensions import Self

from shrinkm.utils import Matrix, Vector

from .cacheable import Cacheable, cached
from .errors import DimensionMismatchError, DomainError, SingularMatrixError


class ScatterMatrix(Cacheable):
    """A symmetric positive definite p×p matrix with a cached factorization.

    Only the lower triangle of the input is read; the upper triangle is
    mirrored from it, so the stored matrix is exactly symmetric. The matrix
    is read-only after construction.

    Attributes:
        entries: The (read-only) p×p matrix.
    """

    def __init__(self, entries: Matrix) -> None:
        super().__init__()
        self.entries = entries
        self.entries.setflags(write=False)

    @classmethod
    def of(cls, entries: npt.ArrayLike) -> Self:
        """Builds a scatter matrix and checks positive definiteness.

        Raises:
            DomainError: If the input is not a finite square matrix.
            SingularMatrixError: If the Cholesky factorization fails.
        """
        a = np.array(entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DomainError(f"Scatter matrix must be square: {a.shape}")
        if not np.all(np.isfinite(a)):
            raise DomainError("Scatter matrix has non-finite entries")
        lower = np.tril(a)
        sym = lower + np.tril(a, -1).T
        matrix = cls(sym)
        matrix.cholesky  # factorize eagerly
        return matrix

    @classmethod
    def identity(cls, dim: int, scale: float = 1.0) -> Self:
        if scale <= 0:
            raise DomainError(f"Identity scale must be positive: {scale}")
        return cls.of(scale * np.eye(dim))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    @cached
    def cholesky(self) -> Matrix:
        """Lower Cholesky factor L with L Lᵀ = entries."""
        try:
            factor = np.linalg.cholesky(self.entries)
        except np.linalg.LinAlgError as e:
            raise SingularMatrixError(
                f"{self.dim}x{self.dim} matrix is not positive definite"
            ) from e
        factor.setflags(write=False)
        return factor

    @property
    @cached
    def trace(self) -> float:
        return float(np.trace(self.entries))

    @property
    @cached
    def eigenvalues(self) -> Vector:
        """Eigenvalues in ascending order."""
        return np.linalg.eigvalsh(self.entries)

    @property
    def frobenius_sq(self) -> float:
        return float(np.sum(self.entries**2))

    @property
    @cached
    def sphericity(self) -> float:
        """p·tr(M²)/tr(M)², which lies in [1, p]."""
        return self.dim * self.frobenius_sq / self.trace**2

    @property
    def scale(self) -> float:
        """Mean eigenvalue tr(M)/p."""
        return self.trace / self.dim

    def quad_forms(self, x: npt.ArrayLike) -> Vector:
        """Quadratic forms xᵢᵀ M⁻¹ xᵢ for every row of `x`.

        Computed by one triangular solve against the cached factor.
        """
        rows = np.atleast_2d(np.asarray(x, dtype=np.float64))
        if rows.shape[1] != self.dim:
            raise DimensionMismatchError(
                f"Rows of length {rows.shape[1]} against a "
                f"{self.dim}x{self.dim} scatter matrix")
        z = sla.solve_triangular(self.cholesky, rows.T, lower=True)
        return np.einsum("ij,ij->j", z, z)

    def scaled(self, factor: float) -> Self:
        return self.of(factor * self.entries)

    def distance_sq(self, other: ScatterMatrix) -> float:
        """Squared Frobenius distance ‖self − other‖²."""
        if other.dim != self.dim:
            raise DimensionMismatchError(
                f"Cannot compare {self.dim}x{self.dim} "
                f"with {other.dim}x{other.dim}")
        return float(np.sum((self.entries - other.entries)**2))

    def __repr__(self) -> str:
        return f"ScatterMatrix(dim={self.dim}, trace={self.trace:.6g})"
