"""Exception types shared across the package."""


class RelayLatError(Exception):
    """Base class for all package errors."""


class DomainError(RelayLatError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class InfeasibleError(RelayLatError, RuntimeError):
    """A transmission scheme cannot be used at the given operating point
    (e.g. a required link has zero gain). Distinct from DomainError so
    callers can treat "bad input" and "no such scheme here" differently.
    """
