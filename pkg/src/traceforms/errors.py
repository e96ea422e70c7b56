"""Exception hierarchy shared across the package."""


class TraceformsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TraceformsError, ValueError):
    """Malformed or out-of-domain user input."""


class InvalidPresentation(InputError):
    """A group presentation whose parameters are inconsistent."""


class CapExceeded(TraceformsError):
    """A computation would exceed a documented size cap."""


class FieldMismatch(TraceformsError, TypeError):
    """Elements of different fields were combined."""


class NotRepresentable(TraceformsError, ArithmeticError):
    """An exact result does not exist in the chosen representation
    (e.g. a Laurent-polynomial quotient with infinitely many terms)."""


class ConsistencyError(TraceformsError, AssertionError):
    """Two independent computation routes disagreed, or a mathematically
    guaranteed identity failed; indicates a bug, never bad input."""
