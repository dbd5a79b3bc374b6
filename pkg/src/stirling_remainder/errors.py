"""Exception types shared across the package."""


class StirlingRemainderError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(StirlingRemainderError, ValueError):
    """An input lies outside a function's mathematical domain."""


class BudgetExceededError(StirlingRemainderError):
    """No affordable number of series terms can meet the requested tolerance."""


class BackendError(StirlingRemainderError):
    """The requested numerical backend is unavailable or unknown."""


class EvaluationError(StirlingRemainderError):
    """An integrand returned a non-finite value at a quadrature node."""


class AccuracyError(StirlingRemainderError):
    """The requested tolerance could not be certified.

    Carries the best value obtained and the error bound actually achieved,
    so callers can decide whether the uncertified result is still useful.
    """

    def __init__(self, message: str, value: float | None = None,
                 achieved: float | None = None):
        super().__init__(message)
        self.value = value
        self.achieved = achieved
