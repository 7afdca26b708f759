"""Custom exception classes for the propagator toolkit."""


class PropagatorError(Exception):
    """Base exception for propagator toolkit errors."""

    def __init__(self, message: str, details: str | None = None):
        """Initialize with message and optional details.

        Args:
            message: Primary error message.
            details: Additional error details or troubleshooting information.
        """
        super().__init__(message)
        self.message = message
        self.details = details

    def __str__(self) -> str:
        """Return formatted error message."""
        if self.details:
            return f"{self.message}\nDetails: {self.details}"
        return self.message


class DomainError(PropagatorError, ValueError):
    """Arguments fall outside the domain of the requested operation."""
    pass


class EnumerationBoundError(PropagatorError):
    """Exhaustive enumeration requested above the configured bound."""
    pass


class TruncationError(PropagatorError):
    """Transfer-matrix cutoff too small; the result would be truncated."""
    pass


class QuadratureError(PropagatorError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(
        self,
        message: str,
        achieved_error: float | None = None,
        panels: int | None = None,
        details: str | None = None,
    ):
        super().__init__(message, details)
        self.achieved_error = achieved_error
        self.panels = panels


class ConfigurationError(PropagatorError):
    """Configuration is missing or invalid."""
    pass


class UsageError(PropagatorError):
    """Command-line arguments are malformed."""
    pass


class ToleranceViolationError(PropagatorError):
    """A verification deviation exceeded its tolerance."""
    pass
