from __future__ import annotations

from pathlib import Path
from typing import Union

import numpy as np
import numpy.typing as npt

Matrix = npt.NDArray[np.float64]
Vector = npt.NDArray[np.float64]
PathLike = Union[str, Path]
Seed = Union[int, np.random.SeedSequence]


class Adaptive:
    """Marks a parameter that is estimated from the data at fit time."""

    _inst = None

    def __new__(cls) -> Adaptive:
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    @classmethod
    def __repr__(cls) -> str:
        return "adaptive"


adaptive = Adaptive()

__all__ = [
    "Adaptive",
    "Matrix",
    "PathLike",
    "Seed",
    "Vector",
    "adaptive",
]
