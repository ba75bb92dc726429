"""Exception types shared across the package."""


class QrmaError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(QrmaError, ValueError):
    """A physical parameter or configuration value is out of its allowed range."""


class ConvergenceError(QrmaError, RuntimeError):
    """An iterative numerical routine failed to converge within its iteration cap."""


class TruncationError(QrmaError, RuntimeError):
    """The Fock-space truncation is too small for the requested accuracy."""


class CompletenessError(TruncationError):
    """An eigenbasis projection lost too much norm to the truncated tail."""
