"""Exception types shared across the package."""


class QMatroidError(Exception):
    """Base class for every error raised by this package."""


class InvalidElement(QMatroidError, ValueError):
    pass


class DivisionByZero(QMatroidError, ZeroDivisionError):
    pass


class InvalidField(QMatroidError, ValueError):
    pass


class DimensionMismatch(QMatroidError, ValueError):
    pass


class InvalidDimension(QMatroidError, ValueError):
    pass


class AmbientMismatch(QMatroidError, ValueError):
    pass


class NotContained(QMatroidError, ValueError):
    pass


class CapExceeded(QMatroidError):
    pass


class IncompleteTable(QMatroidError, ValueError):
    pass


class ReportError(QMatroidError):
    """An error carrying a failed report (with witness) as ``.report``."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotAQMatroid(ReportError):
    pass


class BasisMismatch(ReportError):
    pass


class PreconditionViolated(QMatroidError, ValueError):
    pass


class NonUnique(QMatroidError):
    pass


class LatticeMismatch(QMatroidError, ValueError):
    pass


class EmptyFamily(QMatroidError, ValueError):
    pass


class InternalInconsistency(ReportError):
    """A result contradicting a known mathematical fact; always an implementation bug."""


class WrongDimensions(QMatroidError, ValueError):
    pass


class UnsupportedAmbient(QMatroidError, ValueError):
    pass


class NotOrthogonal(QMatroidError, ValueError):
    pass


class CertificateMissing(ReportError):
    pass


class NotNested(QMatroidError, ValueError):
    pass


class LengthMismatch(QMatroidError, ValueError):
    pass


class ValidationFailed(ReportError):
    pass


class ParseError(QMatroidError, ValueError):
    pass


class UnknownCase(QMatroidError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class BudgetZero(QMatroidError, ValueError):
    pass


class InvalidForm(QMatroidError, ValueError):
    """Gram matrix that is singular or not reflexive."""
