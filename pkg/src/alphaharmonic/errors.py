"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(RuntimeError):
    """An iterative evaluation failed to reach its target tolerance.

    Carries the best available partial result and a tail/error estimate so
    callers can report diagnostics instead of a bare failure.
    """

    def __init__(self, message, partial=None, error_estimate=None, iterations=None):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate
        self.iterations = iterations


class IntegrandError(RuntimeError):
    """An integrand returned a non-finite value at a quadrature node."""

    def __init__(self, message, theta=None):
        super().__init__(message)
        self.theta = theta
