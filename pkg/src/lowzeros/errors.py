"""Exception hierarchy shared by every module.

The CLI maps :class:`DomainError` to exit code 2 and the accuracy/capacity
family to exit code 3.
"""

from __future__ import annotations


class LowZerosError(Exception):
    """Base class for all package errors."""


class DomainError(LowZerosError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapacityError(LowZerosError):
    """A request exceeds a configured table or workload limit."""


class PrecisionError(LowZerosError):
    """A numerical target accuracy was not reached.

    ``achieved`` carries the best error estimate that was obtained.
    """

    def __init__(self, message: str, achieved: float | None = None):
        super().__init__(message)
        self.achieved = achieved


class QuadratureError(PrecisionError):
    """Adaptive quadrature did not converge to the requested tolerance."""


class DataError(LowZerosError):
    """User-supplied data (for example L-function coefficients) is incomplete."""
