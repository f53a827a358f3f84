"""Image pipeline specific exceptions."""

from src.common.exceptions import MemoryToolkitError


class ImageError(MemoryToolkitError):
    """Base exception for the grayscale image pipeline."""


class InvalidImageError(ImageError, ValueError):
    """Raised when pixel data does not match its size or leaves [0, 255]."""


class PgmFormatError(ImageError, ValueError):
    """Raised when a file is not a readable plain (P2) graymap."""


class InvalidAlphabetError(ImageError, ValueError):
    """Raised when a binary expansion is requested for Q that is not a power of two."""


class MalformedPatternError(ImageError, ValueError):
    """Raised when a binary pattern has the wrong length or non-binary entries."""


class ZeroReferenceError(ImageError, ValueError):
    """Raised when an SNR is measured against an all-zero reference."""
