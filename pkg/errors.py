"""
Error Types
Exception hierarchy shared by the numerical modules and the command line
"""


class HallError(Exception):
    """Base class for every error raised by this package"""

    exit_code = 3


class DomainError(HallError, ValueError):
    """An argument lies outside the domain of the operation"""

    exit_code = 2


class MeasureSchemaError(HallError):
    """A measure document could not be parsed or violates the schema"""

    exit_code = 2


class QuadratureError(HallError):
    """Numerical failure inside the quadrature engine"""

    exit_code = 3


class QuadratureConvergenceError(QuadratureError):
    """
    The tolerance was not met

    Raised when the evaluation budget runs out, or when every panel that
    still misses its share of the tolerance is already at the minimum width.

    Args:
        message: Human readable reason
        result: Partial QuadResult at the moment refinement stopped
    """

    def __init__(self, message: str, result=None):
        super().__init__(message, result)
        self.message = message
        self.result = result

    def __str__(self) -> str:
        return self.message


class NonFiniteIntegrandError(QuadratureError):
    """The integrand returned NaN or an infinity at a quadrature node"""


class DegenerateMapError(QuadratureError):
    """|f(re^{iθ})| vanished numerically, so a length ratio is undefined"""
