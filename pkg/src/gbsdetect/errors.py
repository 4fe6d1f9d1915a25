"""Exception types raised across the package."""


class GbsError(Exception):
    """Base class for all package errors."""


class ParseError(GbsError, ValueError):
    """A set specification or data record could not be parsed."""


class DomainError(GbsError, ValueError):
    """Input is well formed but outside the supported domain (duplicates, l > d, ...)."""


class UnsupportedDimension(DomainError):
    pass


class UnknownTable(GbsError, KeyError):
    pass


class DegenerateAfterRetries(GbsError, RuntimeError):
    """Random Hermitian combination kept a degenerate spectrum; re-seed and retry."""
