from .typing import *

__all__ = [
    "Adaptive",
    "Matrix",
    "PathLike",
    "Seed",
    "Vector",
    "adaptive",
]
