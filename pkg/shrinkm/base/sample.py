from __future__ import annotations

import numpy as np
import numpy.typing as npt
from typing_extensions import Self

from shrinkm.utils import Matrix

from .errors import DomainError, InsufficientSamplesError


class DataSample:
    """n observations of a p-dimensional, zero-mean random vector.

    The data are taken as centered; no location is estimated.

    Attributes:
        rows: (n, p) read-only array, one observation per row.
    """

    def __init__(self, rows: Matrix) -> None:
        self.rows = rows
        self.rows.setflags(write=False)

    @classmethod
    def of(cls, rows: npt.ArrayLike) -> Self:
        """Wraps an (n, p) array.

        Raises:
            DomainError: If the array is not 2-D, empty or has non-finite
                entries.
        """
        x = np.array(rows, dtype=np.float64)
        if x.ndim != 2 or x.shape[0] == 0 or x.shape[1] == 0:
            raise DomainError(f"Data must be a non-empty (n, p) array: "
                              f"{x.shape}")
        if not np.all(np.isfinite(x)):
            raise DomainError("Data has non-finite entries")
        return cls(x)

    @property
    def n(self) -> int:
        return self.rows.shape[0]

    @property
    def p(self) -> int:
        return self.rows.shape[1]

    def require_n_greater_than_p(self, operation: str) -> None:
        if self.n <= self.p:
            raise InsufficientSamplesError(
                f"{operation} requires n > p, got n={self.n}, p={self.p}")

    def transformed(self, a: npt.ArrayLike) -> Self:
        """Applies x ↦ A x to every observation."""
        return self.of(self.rows @ np.asarray(a, dtype=np.float64).T)

    def __repr__(self) -> str:
        return f"DataSample(n={self.n}, p={self.p})"
