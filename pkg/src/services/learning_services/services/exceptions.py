"""Constraint learning specific exceptions."""

from src.common.exceptions import MemoryToolkitError


class LearningError(MemoryToolkitError):
    """Base exception for constraint learning."""


class DimensionMismatchError(LearningError, ValueError):
    """Raised when a pattern and a weight vector differ in length."""


class ZeroNormError(LearningError, ValueError):
    """Raised when an update is asked to act on the zero vector."""


class EmptyDatasetError(LearningError, ValueError):
    """Raised when learning or a cost is requested over no patterns."""


class TooManyConstraintsError(LearningError, ValueError):
    """Raised when more constraints are requested than the null space holds."""


class ConstraintRetryError(LearningError):
    """Raised when independent constraints cannot be found within the retry budget."""


class LearningConfigError(LearningError, ValueError):
    """Raised when step sizes break alpha * eta < 1 for the data at hand."""
