class ShrinkageError(Exception):
    """Base class of all errors raised by shrinkm."""


class DomainError(ShrinkageError, ValueError):
    """An argument lies outside the domain of the operation."""


class InsufficientSamplesError(DomainError):
    """The operation requires more observations than dimensions (n > p)."""


class DimensionMismatchError(DomainError):
    pass


class UnknownEstimatorError(DomainError):
    pass


class MalformedDataError(ShrinkageError, ValueError):
    """Input data could not be parsed into a finite numeric matrix."""


class SingularMatrixError(ShrinkageError, RuntimeError):
    """A matrix expected to be positive definite failed to factorize."""


class UnresolvedWeightError(ShrinkageError, RuntimeError):
    """An adaptive weight was evaluated before its parameter was estimated."""


class BracketError(ShrinkageError, RuntimeError):
    pass


__all__ = [
    "BracketError",
    "DimensionMismatchError",
    "DomainError",
    "InsufficientSamplesError",
    "MalformedDataError",
    "ShrinkageError",
    "SingularMatrixError",
    "UnknownEstimatorError",
    "UnresolvedWeightError",
]
