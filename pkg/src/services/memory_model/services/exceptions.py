"""Core model specific exceptions."""

from src.common.exceptions import MemoryToolkitError


class MemoryModelError(MemoryToolkitError):
    """Base exception for pattern, layout and weight model errors."""


class InvalidDatasetError(MemoryModelError, ValueError):
    """Raised when a dataset violates its alphabet or shape invariants."""


class InvalidLayoutError(MemoryModelError, ValueError):
    """Raised when a cluster layout is empty, unsorted, out of range or not covering."""


class InfeasibleLayoutError(MemoryModelError, ValueError):
    """Raised when layout generation parameters cannot be satisfied."""


class ClusterIndexError(MemoryModelError, IndexError):
    """Raised when a cluster id is outside [0, L)."""


class InvalidWeightsError(MemoryModelError, ValueError):
    """Raised when a sparse weight matrix has out-of-range, duplicate or near-zero entries."""


class InvalidNoiseError(MemoryModelError, ValueError):
    """Raised when a pattern does not fit the alphabet it is corrupted over."""


class FileFormatError(MemoryModelError, ValueError):
    """Raised when a dataset, layout or weights text file is malformed."""
