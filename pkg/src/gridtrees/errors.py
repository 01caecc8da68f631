"""Exception types shared across the package.

The CLI maps these onto its exit-code contract (2 for bad configuration or
domain errors, 3 for size-limit rejections); the HTTP service maps them onto
status codes. Rejected transfer steps are *not* errors and are modelled as
values, see setpart.Rejection.
"""


class GridTreesError(Exception):
    """Base class for all package errors."""


class DomainError(GridTreesError, ValueError):
    """Invalid argument or configuration: mismatched ground sets, malformed
    edge lists, bad CLI/service parameters."""


class SizeLimitError(GridTreesError):
    """A request exceeds a hard scale ceiling (Bell-number growth or exact
    linear-algebra budget). The message names the offending bound."""


class InsufficientTermsError(DomainError):
    """Too few sequence terms for the requested recurrence order bound."""


class NoRecurrenceError(GridTreesError):
    """No linear recurrence up to the allowed order fits the terms."""

    def __init__(self, message: str, best_order: int | None = None):
        super().__init__(message)
        self.best_order = best_order
