"""Exception types shared across the package."""


class ConsistencyError(Exception):
    """Two independent computation routes disagreed.

    Raised when exact values that must coincide (different formulas for the
    same quantity, internal identities) differ. Indicates a bug or a broken
    invariant, never bad user input.
    """


class SizeLimitError(ValueError):
    """Requested size exceeds the documented practical bound."""


class UnsupportedFieldError(ValueError):
    """Field arithmetic requested for a modulus that is not prime."""


class ExcludedCaseError(ValueError):
    """Parameter combination explicitly excluded from the analysis."""
