"""Exception types raised by the library."""


class DomainError(ValueError):
    """Argument outside the domain where an operation is defined."""


class SingularConfigurationError(ZeroDivisionError):
    """A reflection-coefficient denominator vanishes."""


class ResonanceError(ZeroDivisionError):
    """The multiple-reflection resolvent is singular (|b| = 1 at resonance)."""


class AccuracyError(ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance.

    The best available estimate is kept on the exception.
    """

    def __init__(self, message, estimate, abs_error):
        super().__init__(message)
        self.estimate = estimate
        self.abs_error = abs_error
