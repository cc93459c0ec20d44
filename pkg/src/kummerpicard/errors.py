"""Exception types shared across the library."""


class KummerError(Exception):
    """Base class for all library-specific errors."""


class BadPrimeError(KummerError):
    """The surface does not have the required reduction type at this prime."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class DegenerateFormError(KummerError):
    """A quadratic form that was required to be nondegenerate is not."""


class DegenerateFamilyError(KummerError):
    """Coefficients outside the valid (smooth 16-node) family."""


class InapplicableError(KummerError):
    """Preconditions of a verification are not satisfiable over this field."""


class InconsistentCountsError(KummerError):
    """Point counts that cannot come from a single curve."""


class UnsupportedLevelError(KummerError):
    """No modular polynomial data for the requested level."""


class InternalCheckError(KummerError):
    """A built-in cross-check failed; indicates a bug or bad input data."""
