"""Analysis specific exceptions."""

from src.common.exceptions import MemoryToolkitError


class AnalysisError(MemoryToolkitError):
    """Base exception for bounds, density evolution and spectra."""


class BoundDomainError(AnalysisError, ValueError):
    """Raised when a bound is evaluated outside its domain, e.g. mean degree above m."""


class InvalidTrialsError(AnalysisError, ValueError):
    """Raised when a Monte Carlo estimate is asked for fewer than one trial."""


class EmptySpectrumError(AnalysisError, ValueError):
    """Raised when a spectrum is requested for an empty dataset."""
