"""Exception hierarchy shared by every module of the package."""


class EinsteinTypeError(Exception):
    """Base class for all errors raised by this package."""


class OutOfDomainError(EinsteinTypeError, ValueError):
    """A point or radius lies outside the admissible domain."""


class DegenerateMetricError(EinsteinTypeError, ValueError):
    """The metric failed a symmetry or positive-definiteness check."""


class UnsupportedChartError(EinsteinTypeError, ValueError):
    """No built-in coordinate chart exists for the requested fiber."""


class IntervalMismatchError(EinsteinTypeError, ValueError):
    pass


class DimensionError(EinsteinTypeError, ValueError):
    pass


class InvalidParametersError(EinsteinTypeError, ValueError):
    """Parameters violate a structural constraint (sign, range, (beta, mu) != (0, 0))."""


class BetaZeroError(InvalidParametersError):
    """Reduction by beta is impossible; use ``triviality_check_beta_zero``."""


class NoModelError(EinsteinTypeError):
    """The requested case admits no non-trivial model."""


class InsufficientSmoothnessError(EinsteinTypeError):
    """A residual needs derivatives the input does not provide."""


class StiffnessError(EinsteinTypeError, RuntimeError):
    """The ODE integrator could not continue (step-size underflow)."""

    def __init__(self, message, last_r=None):
        super().__init__(message)
        self.last_r = last_r
