"""
Special Functions Module
Gamma and beta functions plus the closed-form Gehring-Hayman constants
"""
import math
import logging
from dataclasses import dataclass

from errors import DomainError

logger = logging.getLogger(__name__)

# Lanczos approximation, g = 7, nine terms (about 15 significant digits)
LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
LOG_FOUR = math.log(4.0)


@dataclass(frozen=True)
class OrderAlpha:
    """
    Order parameter of the class S*(α)

    Args:
        alpha: Order in [0, 1); α = 1 is excluded because γ = -1 is outside
            the range where the pointwise bound on the square-root term holds
    """

    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not (0.0 <= alpha < 1.0):
            raise DomainError(f"alpha must lie in [0, 1), got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)

    @property
    def gamma_param(self) -> float:
        """γ = 1 - 2α, always derived from alpha"""
        return 1.0 - 2.0 * self.alpha

    @classmethod
    def from_gamma(cls, gamma: float) -> "OrderAlpha":
        """Build the order with γ = 1 - 2α; γ must lie in (-1, 1]"""
        if not (-1.0 < gamma <= 1.0):
            raise DomainError(f"gamma must lie in (-1, 1], got {gamma!r}")
        return cls((1.0 - gamma) / 2.0)


def _as_order(order) -> OrderAlpha:
    return order if isinstance(order, OrderAlpha) else OrderAlpha(order)


def log_gamma(x: float) -> float:
    """
    Natural logarithm of Γ(x) for real x > 0

    Uses the Lanczos series for x >= 1/2 and the reflection formula below.

    Raises:
        DomainError: If x <= 0
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    if x < 0.5:
        # Γ(x)Γ(1-x) = π / sin(πx), sin(πx) > 0 on (0, 1/2)
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)

    z = x - 1.0
    series = LANCZOS_COEFFS[0]
    for i, coeff in enumerate(LANCZOS_COEFFS[1:], start=1):
        series += coeff / (z + i)
    t = z + LANCZOS_G + 0.5
    return HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(series)


def gamma_fn(x: float) -> float:
    """Γ(x) for x > 0"""
    return math.exp(log_gamma(x))


def beta_fn(x: float, y: float) -> float:
    """
    Euler beta function B(x, y) = Γ(x)Γ(y)/Γ(x+y)

    Raises:
        DomainError: If either argument is not positive
    """
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"beta_fn requires x, y > 0, got ({x!r}, {y!r})")
    return math.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y))


def hall_constant(order) -> float:
    """
    Sharp Gehring-Hayman constant β(α) = Γ(1/2)Γ(2-α)/Γ(3/2-α)

    Args:
        order: OrderAlpha (a bare float is accepted and validated)

    Returns:
        float: β(α), decreasing from 2 at α = 0 towards 1 as α -> 1
    """
    alpha = _as_order(order).alpha
    return math.exp(log_gamma(0.5) + log_gamma(2.0 - alpha) - log_gamma(1.5 - alpha))


def hall_crude_bound(order) -> float:
    """
    Non-sharp bound 1 + (1-α)(log 4)^α

    The exponent sits on log 4 as α, not 1-α, so the bound equals 2 at α = 0
    (where it coincides with β(0)) and about 1.588 at α = 1/2.
    """
    alpha = _as_order(order).alpha
    return 1.0 + (1.0 - alpha) * LOG_FOUR ** alpha
