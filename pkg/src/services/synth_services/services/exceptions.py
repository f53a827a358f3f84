"""Pattern generator specific exceptions."""

from src.common.exceptions import MemoryToolkitError


class SynthError(MemoryToolkitError):
    """Base exception for subspace pattern generation."""


class InfeasibleGeneratorError(SynthError, ValueError):
    """Raised when no generator matrix fits the alphabet and degree budget."""


class PatternBudgetError(SynthError, ValueError):
    """Raised when unlimited enumeration would exceed the configured pattern budget."""
