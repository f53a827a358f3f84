"""Base exception shared by every service package."""


class MemoryToolkitError(Exception):
    """Base exception for all associative-memory toolkit errors."""
