"""Recall specific exceptions."""

from src.common.exceptions import MemoryToolkitError


class RecallError(MemoryToolkitError):
    """Base exception for intra-cluster correction and peeling."""


class DimensionMismatchError(RecallError, ValueError):
    """Raised when a (sub-)pattern length does not match the weights it is checked against."""


class MissingWeightsError(RecallError, ValueError):
    """Raised when the weights do not cover every cluster of the layout."""
