"""Exception types shared across the package."""


class MonodromicError(Exception):
    """Base class for all package errors."""


class AmbientMismatch(MonodromicError):
    """Two subspaces or maps live in different ambient dimensions."""


class WindowTooSmall(MonodromicError):
    """An operation needs eigenvalue pieces outside the materialized window."""


class TruncationTooSmall(MonodromicError):
    """A graph-space operation needs cells outside the truncation bounds."""


class BadParams(MonodromicError):
    """Invalid parameters for an example-module family."""


class NotNilpotent(MonodromicError):
    """A matrix required to be nilpotent is not."""


class NotCompatible(MonodromicError):
    """A nilpotent operator does not preserve the given filtration."""


class AdmissibilityFailure(MonodromicError):
    """Splitting data violates the admissibility relations."""


class SeedInvalid(MonodromicError):
    """A seed splitting does not split the filtration or commute as required."""


class NotSl2(MonodromicError):
    """No raising operator completes the given pair to an sl2-triple."""


class FlagMismatch(MonodromicError):
    """A map does not preserve the flags it is checked against."""


class ParseError(MonodromicError):
    """A module or data file could not be parsed."""

    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class ValidationError(MonodromicError):
    """A parsed module violates its structural invariants."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UsageError(MonodromicError):
    """Bad command-line usage."""
