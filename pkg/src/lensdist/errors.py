"""Exception types shared across the package."""


class LensdistError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidInputError(LensdistError):
    """Arguments violate a precondition (non-coprime pair, bad range, unknown name)."""


class InapplicableError(LensdistError):
    """The requested operation is not defined for this input (e.g. p < 2)."""
