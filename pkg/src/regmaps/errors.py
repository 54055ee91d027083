"""Exception and warning types shared across the package."""


class RegmapsError(Exception):
    """Base class for all errors raised by this package."""


class FamilyMismatchError(RegmapsError, TypeError):
    """Group elements from incompatible families were combined."""


class UnsupportedExtensionError(RegmapsError, ValueError):
    """A root of unity was requested outside F_p and its quadratic extension."""


class OrderLimitError(RegmapsError, RuntimeError):
    """An operation required enumerating a group beyond the configured limit."""


class MapValidationError(RegmapsError, ValueError):
    """A triple failed one of the algebraic-map axioms."""


class DegenerateQuotientError(RegmapsError, ValueError):
    """A quotient map collapsed one of the defining involutions."""


class InternalInvariantError(RegmapsError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class DegenerateMapWarning(UserWarning):
    """A valid map with degenerate type data (entry < 3, or t = l)."""
