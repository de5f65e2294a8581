from .cacheable import Cacheable, cached
from .errors import (BracketError, DimensionMismatchError, DomainError,
                     InsufficientSamplesError, MalformedDataError,
                     ShrinkageError, SingularMatrixError,
                     UnknownEstimatorError, UnresolvedWeightError)
from .sample import DataSample
from .scatter import ScatterMatrix

__all__ = [
    "BracketError",
    "Cacheable",
    "DataSample",
    "DimensionMismatchError",
    "DomainError",
    "InsufficientSamplesError",
    "MalformedDataError",
    "ScatterMatrix",
    "ShrinkageError",
    "SingularMatrixError",
    "UnknownEstimatorError",
    "UnresolvedWeightError",
    "cached",
]
