"""Exception types shared across the package."""


class VacprobeError(Exception):
    """Base class for all package-specific errors."""


class DomainError(VacprobeError, ValueError):
    """An input violates a documented precondition (bad parameter range)."""


class SingularPointError(VacprobeError, ArithmeticError):
    """Evaluation was requested on (or too close to) a singular point."""


class QuadratureError(VacprobeError, RuntimeError):
    """A numerical integration did not reach the requested accuracy.

    Carries the achieved error estimate so callers can decide whether the
    partial result is still useful.
    """

    def __init__(self, message: str, value: float = float("nan"),
                 error_estimate: float = float("inf")):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
