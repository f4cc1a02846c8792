"""Exception hierarchy shared across the package."""


class BordersubError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(BordersubError, ValueError):
    """Objects of different formats n were combined."""


class InvalidValueError(BordersubError, ValueError):
    """Malformed input: out-of-range index, zero coefficient, bad bijection,
    cocharacter violating the zero-sum constraint, unparsable file, ..."""


class PreconditionError(BordersubError, ValueError):
    """An operation's stated precondition does not hold (reported distinctly
    from a negative verdict)."""


class CapExceededError(BordersubError, ValueError):
    """A configured size cap would be exceeded and best-effort mode is off."""


class InternalError(BordersubError, RuntimeError):
    """A result failed its own soundness re-check; indicates a bug."""
