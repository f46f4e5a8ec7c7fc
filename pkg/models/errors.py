"""
Exception hierarchy shared by every verification module.

Suites turn the "expected" failures (unsupported inputs, uncovered cases,
missing caller numerics) into skipped records; anything else is a fail.
"""

from typing import Optional


class VerificationError(Exception):
    """Base class for all errors raised by the toolkit."""


class PrecisionError(VerificationError):
    """Raised when a result cannot be decided at the working precision."""

    def __init__(self, message: str, needed: Optional[int] = None):
        self.needed = needed
        suffix = f" (needs precision {needed})" if needed is not None else ""
        super().__init__(f"Precision exhausted: {message}{suffix}")


class InvalidDataError(VerificationError):
    """Raised when input data violates the assumptions of a construction."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(f"Invalid data: {message}")


class CapacityError(VerificationError):
    """Raised when an enumeration would exceed the configured capacity cap."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"Enumeration of {size} elements exceeds capacity cap {cap}")


class UnsupportedKindError(VerificationError):
    """Raised when a representation kind has no formula for the request."""

    def __init__(self, kind: str, operation: str):
        self.kind = kind
        self.operation = operation
        super().__init__(f"{operation} is not available for representation kind '{kind}'")


class UnsupportedTranslateError(VerificationError):
    """Raised when a zeta integral translate is not of a supported shape."""

    def __init__(self, shape: str):
        self.shape = shape
        super().__init__(f"Unsupported translate shape: {shape}")


class DepthExceededError(VerificationError):
    """Raised when a classification search runs past its depth bound."""

    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(f"Not classified within depth {depth}")


class NotCoveredError(VerificationError):
    """Raised for parameter regions where no closed form is available."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(f"Not covered: {message}")


class IncompleteInputError(VerificationError):
    """Raised when a global constant needs a value the caller did not supply."""

    def __init__(self, missing: str):
        self.missing = missing
        super().__init__(f"Missing caller-supplied value: {missing}")


class InternalError(VerificationError):
    """Raised when a computed quantity breaks an internal invariant (a bug)."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(f"Internal error: {message}")


class UsageError(VerificationError):
    """Raised for malformed suite configurations or unknown suite names."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


# Errors that make a check "skipped" rather than "fail"
SKIPPABLE_ERRORS = (
    UnsupportedKindError,
    UnsupportedTranslateError,
    NotCoveredError,
    IncompleteInputError,
    CapacityError,
)
