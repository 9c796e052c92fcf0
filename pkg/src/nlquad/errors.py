"""Typed error values shared across the package.

Callers are expected to catch these by type; the composite layer in
particular catches ``DomainError`` to trigger per-panel fallbacks.
"""


class QuadratureError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(QuadratureError):
    """Unknown identifier or invalid configuration value."""


class SampleError(QuadratureError):
    """An integrand sample was undefined or non-finite."""

    def __init__(self, message, node_index=None, x=None):
        super().__init__(message)
        self.node_index = node_index
        self.x = x


class DomainError(QuadratureError):
    """Sample values violate a rule's admissible domain."""


class OutOfRange(DomainError):
    """A sample lies outside the range of the rule's target function."""


class DerivativeZero(DomainError):
    """The target's first derivative vanished where the series branch needs it."""


class OrderTooLarge(ConfigError):
    """Moment order exceeds the exact-factorial limit."""


class TailError(DomainError):
    """The final sample pair does not decay, so no tail can be attached."""


class LengthError(QuadratureError):
    """Too few samples for the requested strategy."""


class ParseError(QuadratureError):
    """Malformed input file."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class GridError(QuadratureError):
    """Sample abscissae are not equispaced."""
