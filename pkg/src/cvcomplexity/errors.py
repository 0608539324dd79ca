"""Semantic exception hierarchy for the package.

Public functions never raise bare ``ValueError``/``RuntimeError``; every
failure mode maps onto one of the classes below so callers (and the CLI)
can distinguish bad inputs from numerical breakdowns.
"""


class CvComplexityError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CvComplexityError, ValueError):
    """An input lies outside the mathematical domain of the operation."""


class FieldEvaluationError(CvComplexityError, ArithmeticError):
    """A Husimi field produced a non-finite value at a quadrature node."""

    def __init__(self, message: str, point: complex | None = None):
        super().__init__(message)
        self.point = point


class QuadratureError(CvComplexityError, RuntimeError):
    """The phase-plane quadrature failed to reach its tail tolerance."""


class ConsistencyError(CvComplexityError, RuntimeError):
    """A computed quantity violated a structural bound it must satisfy."""


class TruncationError(CvComplexityError, ValueError):
    """A Fock-space truncation dimension is too small for the request."""


class ReliabilityError(CvComplexityError, RuntimeError):
    """The requested evaluation falls outside the trustworthy regime."""
