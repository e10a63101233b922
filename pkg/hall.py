"""
Proof Chain Module
The integrand I(s,t), the reduction of the length bound to it for one map,
its J/K decomposition, the pointwise bound on the
square-root term, the half-line majorant U(a,γ), the closed form of G₁ and its
helper functions, the beta-function evaluation of the final bound and the
sharpness limit along k_α
"""
import math
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple, Union

import numpy as np

from errors import DomainError
from hall_config import DEFAULT_ABS_TOL, DEFAULT_REL_TOL
from quadrature import integrate_graded, integrate_halfline
from specfun import OrderAlpha, hall_constant
from starlike import (
    HerglotzMeasure,
    StarlikeMap,
    eval_map,
    eval_map_prime,
    gh_ratio,
    koebe_map,
    rotate_measure,
    transfer_H,
)

logger = logging.getLogger(__name__)

ArrayOrFloat = Union[float, np.ndarray]

# G1_closed switches to its defining integral this close to a = 1
G1_CLOSED_SWITCH = 1e-4


def chord_square(x: float) -> float:
    """2(1 - cos x), evaluated as 4 sin²(x/2) to keep small angles accurate"""
    half = math.sin(0.5 * x)
    return 4.0 * half * half


def _order(order) -> OrderAlpha:
    return order if isinstance(order, OrderAlpha) else OrderAlpha(order)


def _check_angle(name: str, x: float) -> None:
    if not (0.0 < x <= math.pi):
        raise DomainError(f"{name} must lie in (0, pi], got {x!r}")


def _check_chord(name: str, x: float) -> None:
    if not (0.0 < x <= 4.0):
        raise DomainError(f"{name} must lie in (0, 4], got {x!r}")


def _check_gamma(gamma: float) -> None:
    if not (-1.0 < gamma <= 1.0):
        raise DomainError(f"gamma must lie in (-1, 1], got {gamma!r}")


def _peak_width(*chords: float) -> float:
    """The u-integrands vary on the scale √min(S, T) next to u = 1"""
    return math.sqrt(min(chords))


@dataclass(frozen=True)
class ChordPair:
    """Angles (s, t) with squared chords S, T and their ratio a = T/S"""

    s: float
    t: float

    def __post_init__(self):
        _check_angle("s", self.s)
        _check_angle("t", self.t)

    @property
    def S(self) -> float:
        return chord_square(self.s)

    @property
    def T(self) -> float:
        return chord_square(self.t)

    @property
    def a(self) -> float:
        return self.T / self.S

    def swapped(self) -> "ChordPair":
        return ChordPair(self.t, self.s)


# ---------------------------------------------------------------------------
# The integrand I and its decompositions
# ---------------------------------------------------------------------------

def I_angles(
    s: float,
    t: float,
    order,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """
    I(s, t) in angle form

    ∫_0^1 { √(1+γ²u²+2γu cos t)/√(1+u²-2u cos t)
            - (1-γu²-2αu cos t)/(1+u²-2u cos t) } {2(1-cos s)/(1+u²-2u cos s)}^{1-α} du

    The denominators 1+u²-2u cos x are formed as (1-u)² + 2(1-cos x)u.
    """
    _check_angle("s", s)
    _check_angle("t", t)
    order = _order(order)
    alpha, gamma = order.alpha, order.gamma_param
    S, T = chord_square(s), chord_square(t)
    cos_t = math.cos(t)

    def integrand(u: np.ndarray) -> np.ndarray:
        d_t = (1.0 - u) ** 2 + T * u
        d_s = (1.0 - u) ** 2 + S * u
        modulus = np.sqrt(np.maximum(1.0 + gamma * gamma * u * u + 2.0 * gamma * u * cos_t, 0.0))
        real_part = 1.0 - gamma * u * u - 2.0 * alpha * u * cos_t
        return (modulus / np.sqrt(d_t) - real_part / d_t) * (S / d_s) ** (1.0 - alpha)

    return integrate_graded(integrand, 0.0, 1.0, _peak_width(S, T), tol=tol, rel_tol=rel_tol).value


def I_st(
    S: float,
    T: float,
    gamma: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """
    I(S, T) in squared-chord form

    ∫_0^1 (S/((1-u)²+Su))^{(1+γ)/2}
          [ √((1+γu)²-γTu)/√((1-u)²+Tu) - (1-γu²-(1-γ)(1-T/2)u)/((1-u)²+Tu) ] du
    """
    _check_chord("S", S)
    _check_chord("T", T)
    _check_gamma(gamma)
    power = 0.5 * (1.0 + gamma)

    def integrand(u: np.ndarray) -> np.ndarray:
        d_t = (1.0 - u) ** 2 + T * u
        d_s = (1.0 - u) ** 2 + S * u
        first = np.sqrt(np.maximum((1.0 + gamma * u) ** 2 - gamma * T * u, 0.0)) / np.sqrt(d_t)
        second = (1.0 - gamma * u * u - (1.0 - gamma) * (1.0 - 0.5 * T) * u) / d_t
        return (S / d_s) ** power * (first - second)

    return integrate_graded(integrand, 0.0, 1.0, _peak_width(S, T), tol=tol, rel_tol=rel_tol).value


def I_sum(S: float, T: float, gamma: float, tol: float = DEFAULT_ABS_TOL, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """I(S,T) + I(T,S)"""
    return I_st(S, T, gamma, tol, rel_tol) + I_st(T, S, gamma, tol, rel_tol)


def jk_values(
    s: float,
    t: float,
    order,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> Tuple[float, float]:
    """
    The integrals J(s, t) and K(s, t)

    J has the square-root numerator in t and the power factor
    (1+u²-2u cos s)^{1-α} in s; K has the real-part numerator in t and the
    same factor in s.

    Returns:
        tuple: (J, K)
    """
    _check_angle("s", s)
    _check_angle("t", t)
    order = _order(order)
    alpha, gamma = order.alpha, order.gamma_param
    S, T = chord_square(s), chord_square(t)
    cos_t = math.cos(t)

    def j_integrand(u: np.ndarray) -> np.ndarray:
        d_t = (1.0 - u) ** 2 + T * u
        d_s = (1.0 - u) ** 2 + S * u
        num = np.sqrt(np.maximum((1.0 + gamma * u) ** 2 - 2.0 * gamma * u * (0.5 * T), 0.0))
        return num / (np.sqrt(d_t) * d_s ** (1.0 - alpha))

    def k_integrand(u: np.ndarray) -> np.ndarray:
        d_t = (1.0 - u) ** 2 + T * u
        d_s = (1.0 - u) ** 2 + S * u
        num = 1.0 - gamma * u * u - 2.0 * alpha * u * cos_t
        return num / (d_t * d_s ** (1.0 - alpha))

    width = _peak_width(S, T)
    j_value = integrate_graded(j_integrand, 0.0, 1.0, width, tol=tol, rel_tol=rel_tol).value
    k_value = integrate_graded(k_integrand, 0.0, 1.0, width, tol=tol, rel_tol=rel_tol).value
    return j_value, k_value


def recompose_I(s: float, t: float, order, tol: float = DEFAULT_ABS_TOL, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """[2(1-cos s)]^{1-α} [J(s,t) - K(s,t)], the pairing that reproduces I(s,t)"""
    order = _order(order)
    j_value, k_value = jk_values(s, t, order, tol, rel_tol)
    return chord_square(s) ** (1.0 - order.alpha) * (j_value - k_value)


def jk_pairing_discrepancy(
    s: float,
    t: float,
    order,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> Tuple[float, float]:
    """
    How far each J/K argument pairing lands from I(s, t)

    Returns:
        tuple: (|S^{1-α}[J(s,t)-K(s,t)] - I(s,t)|, |S^{1-α}[J(t,s)-K(t,s)] - I(s,t)|)
    """
    order = _order(order)
    reference = I_angles(s, t, order, tol, rel_tol)
    scale = chord_square(s) ** (1.0 - order.alpha)
    j_st, k_st = jk_values(s, t, order, tol, rel_tol)
    j_ts, k_ts = jk_values(t, s, order, tol, rel_tol)
    return abs(scale * (j_st - k_st) - reference), abs(scale * (j_ts - k_ts) - reference)


# ---------------------------------------------------------------------------
# Reduction of the length bound to I(s,t) for one map
# ---------------------------------------------------------------------------

class Lemma1Chain(NamedTuple):
    """
    Every link of the reduction for one map, along h(u) = e^{-iθ} f(u e^{iθ})

    Quantities carrying |h(u)| are divided by |h(1)|, so they are scale free.
    """

    h1: float  # |h(1)|
    ratio: float  # ∫_0^1 |h'(u)| du / |h(1)|
    identity_residual: float  # ∫ Re H |h|/u du / |h(1)| - 1
    jensen_margin: float
    modulus_margin: float
    defect: float  # ∫ (|H| - Re H) |h|/u du / |h(1)|
    defect_bound: float  # ½ ∬ [I(s,t) + I(t,s)] dW(t) dW(s)

    @property
    def bound_margin(self) -> float:
        return self.defect_bound - self.defect

    @property
    def length_margin(self) -> float:
        """1 + defect_bound - ratio; nonnegative when ∫|h'| <= |h(1)|(1 + ½∬[I+I]dWdW)"""
        return 1.0 + self.defect_bound - self.ratio


def folded_measure(measure: HerglotzMeasure, theta: float = 0.0) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes |t_j - θ| in (0, π] and weights of the measure W seen from the ray

    Raises:
        DomainError: If an atom sits on the ray, where |h(1)| is infinite
    """
    rotated = rotate_measure(measure, -theta)
    nodes = np.abs(rotated.node_array)
    if np.any(nodes <= 0.0):
        raise DomainError(f"an atom lies on the ray theta={theta!r}; |h(1)| is infinite")
    return nodes, rotated.weight_array


def lemma1_chain(
    measure: HerglotzMeasure,
    alpha,
    theta: float = 0.0,
    u_points: int = 64,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> Lemma1Chain:
    """
    Check the reduction of ∫_0^1 |h'(u)| du <= β(α)|h(1)| to I(s,t) for an atomic measure

    The links are:
      - ∫_0^1 Re H(u) |h(u)|/u du = |h(1)|
      - |h(u)|/u <= |h(1)| ∫ {2(1-cos t)/(1+u²-2u cos t)}^{1-α} dW(t) (Jensen)
      - |H(u)| - Re H(u) <= ∫ [|1+γue^{-it}|/|1-ue^{-it}| - Re (1+γue^{-it})/(1-ue^{-it})] dW(t)
      - ∫_0^1 (|H| - Re H)|h|/u du <= (|h(1)|/2) ∬ [I(s,t) + I(t,s)] dW(t) dW(s)

    The pointwise links are checked on u = k/(u_points+1), k = 1..u_points.

    Args:
        measure: Herglotz measure of f
        alpha: Order α in [0, 1)
        theta: Ray direction; must not carry an atom
        u_points: Number of interior u samples for the pointwise links
        tol, rel_tol: Quadrature tolerances

    Returns:
        Lemma1Chain: Values and margins of every link
    """
    order = _order(alpha)
    if u_points < 1:
        raise DomainError(f"u_points must be >= 1, got {u_points!r}")
    a, gamma = order.alpha, order.gamma_param
    nodes, weights = folded_measure(measure, theta)
    m = StarlikeMap(rotate_measure(measure, -theta), order)
    chords = np.array([chord_square(float(t)) for t in nodes])
    cos_t = np.cos(nodes)
    h1 = math.exp(-(1.0 - a) * float(np.log(chords) @ weights))

    u = np.arange(1, u_points + 1) / (u_points + 1)
    col = u[:, None]
    d = (1.0 - col) ** 2 + chords * col
    kernel_modulus = np.sqrt(np.maximum(1.0 + gamma * gamma * col ** 2 + 2.0 * gamma * col * cos_t, 0.0))
    kernel_real = 1.0 - gamma * col ** 2 - 2.0 * a * col * cos_t
    gap = kernel_modulus / np.sqrt(d) - kernel_real / d

    h_over_u = np.abs(eval_map(m, u)) / u
    jensen = ((chords / d) ** (1.0 - a) @ weights - h_over_u / h1).min()
    H = transfer_H(m, u)
    modulus = (gap @ weights - (np.abs(H) - H.real)).min()

    width = _peak_width(*chords)

    def real_part_term(x: np.ndarray) -> np.ndarray:
        return transfer_H(m, x).real * np.abs(eval_map(m, x)) / (x * h1)

    def defect_term(x: np.ndarray) -> np.ndarray:
        H = transfer_H(m, x)
        return (np.abs(H) - H.real) * np.abs(eval_map(m, x)) / (x * h1)

    def speed(x: np.ndarray) -> np.ndarray:
        return np.abs(eval_map_prime(m, x)) / h1

    identity = integrate_graded(real_part_term, 0.0, 1.0, width, tol=tol, rel_tol=rel_tol).value
    defect = integrate_graded(defect_term, 0.0, 1.0, width, tol=tol, rel_tol=rel_tol).value
    ratio = integrate_graded(speed, 0.0, 1.0, width, tol=tol, rel_tol=rel_tol).value

    n = nodes.size
    pairs = np.empty((n, n))
    for j in range(n):
        for k in range(n):
            pairs[j, k] = I_angles(float(nodes[j]), float(nodes[k]), order, tol, rel_tol)
    defect_bound = 0.5 * float(weights @ (pairs + pairs.T) @ weights)

    logger.debug(f"lemma1 chain: atoms={n} ratio={ratio!r} defect={defect!r} bound={defect_bound!r}")
    return Lemma1Chain(h1, ratio, identity - 1.0, float(jensen), float(modulus), defect, defect_bound)


# ---------------------------------------------------------------------------
# Pointwise bound on the square-root term
# ---------------------------------------------------------------------------

def check_pointwise_lemma2(u: ArrayOrFloat, T: ArrayOrFloat, gamma: ArrayOrFloat) -> ArrayOrFloat:
    """
    Margin RHS - LHS of

        √((1+γu)²-γTu)/√((1-u)²+Tu) <= (1+γ)/2 (1+u)/√((1-u)²+Tu) + (1-γ)/2

    Accepts numpy arrays (broadcast) for grid sweeps.

    Raises:
        DomainError: Outside u ∈ (0,1), T ∈ [0,4), γ ∈ (-1,1]
    """
    u_arr, t_arr, g_arr = (np.asarray(x, dtype=float) for x in (u, T, gamma))
    if np.any((u_arr <= 0.0) | (u_arr >= 1.0)):
        raise DomainError("u must lie in (0, 1)")
    if np.any((t_arr < 0.0) | (t_arr >= 4.0)):
        raise DomainError("T must lie in [0, 4)")
    if np.any((g_arr <= -1.0) | (g_arr > 1.0)):
        raise DomainError("gamma must lie in (-1, 1]")

    root = np.sqrt((1.0 - u_arr) ** 2 + t_arr * u_arr)
    lhs = np.sqrt(np.maximum((1.0 + g_arr * u_arr) ** 2 - g_arr * t_arr * u_arr, 0.0)) / root
    rhs = 0.5 * (1.0 + g_arr) * (1.0 + u_arr) / root + 0.5 * (1.0 - g_arr)
    margin = rhs - lhs
    return float(margin) if margin.ndim == 0 else margin


def phi_lemma2(T: ArrayOrFloat, u: ArrayOrFloat, b: ArrayOrFloat) -> ArrayOrFloat:
    """
    φ(T) = ½[√((1-u)²+Tu) - (1-u)] - [√((1-bu)²+bTu) - (1-bu)]/(1+b)

    The γ = -b < 0 branch of the pointwise bound, rewritten so that the
    claim reads φ(T) >= 0 with φ(0) = 0.
    """
    T, u, b = (np.asarray(x, dtype=float) for x in (T, u, b))
    if np.any((b <= 0.0) | (b >= 1.0)):
        raise DomainError("b must lie in (0, 1)")
    value = 0.5 * (np.sqrt((1.0 - u) ** 2 + T * u) - (1.0 - u)) - (
        np.sqrt((1.0 - b * u) ** 2 + b * T * u) - (1.0 - b * u)
    ) / (1.0 + b)
    return float(value) if value.ndim == 0 else value


def phi_prime_lemma2(T: ArrayOrFloat, u: ArrayOrFloat, b: ArrayOrFloat) -> ArrayOrFloat:
    """φ'(T) = u/(4√((1-u)²+Tu)) - bu/(2(1+b)√((1-bu)²+bTu))"""
    T, u, b = (np.asarray(x, dtype=float) for x in (T, u, b))
    value = 0.25 * u / np.sqrt((1.0 - u) ** 2 + T * u) - b * u / (
        2.0 * (1.0 + b) * np.sqrt((1.0 - b * u) ** 2 + b * T * u)
    )
    return float(value) if value.ndim == 0 else value


# ---------------------------------------------------------------------------
# Half-line majorant and its maximum
# ---------------------------------------------------------------------------

def G_gamma(
    a: float,
    gamma: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """
    G(a) = ∫_0^∞ [(a+w)^{-(1+γ)/2} + (1/a+w)^{-(1+γ)/2}] (√(1+w)-1)/(1+w) w^{-(1-γ)/2} dw

    Symmetric under a -> 1/a and maximal at a = 1.
    """
    if not a > 0.0:
        raise DomainError(f"a must be positive, got {a!r}")
    _check_gamma(gamma)
    power = 0.5 * (1.0 + gamma)
    inv_a = 1.0 / a

    def integrand(w: np.ndarray) -> np.ndarray:
        bracket = (a + w) ** (-power) + (inv_a + w) ** (-power)
        # (√(1+w)-1) w^{-(1-γ)/2} = w^{(1+γ)/2} / (√(1+w)+1)
        return bracket * w ** power / ((np.sqrt(1.0 + w) + 1.0) * (1.0 + w))

    return integrate_halfline(integrand, sing0=-0.5 * (1.0 - gamma), tol=tol, rel_tol=rel_tol).value


def upper_bound_U(
    a: float,
    gamma: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """U(a, γ) = ((1+γ)/2) G_gamma(a, γ), the majorant of I(S,T) + I(T,S) with a = T/S"""
    return 0.5 * (1.0 + gamma) * G_gamma(a, gamma, tol, rel_tol)


def lemma3_domination(
    S: float,
    T: float,
    gamma: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """Margin U(T/S, γ) - (I(S,T) + I(T,S)); nonnegative when the majorant holds"""
    return upper_bound_U(T / S, gamma, tol, rel_tol) - I_sum(S, T, gamma, tol, rel_tol)


# ---------------------------------------------------------------------------
# γ = 1: closed form of G₁ and the monotonicity helpers
# ---------------------------------------------------------------------------

def G1_quadrature(a: float, tol: float = DEFAULT_ABS_TOL, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """∫_0^∞ [1/(a+w) + 1/(1/a+w)] (√(1+w)-1)/(1+w) dw by quadrature"""
    return G_gamma(a, 1.0, tol, rel_tol)


def G1_closed(a: float) -> float:
    """
    Closed form of G₁(a) on (0, 1)

    2√(a/(1-a)) arctan√((1-a)/a) + (1/√(1-a)) log((1+√(1-a))/(1-√(1-a))) - ((1+a)/(1-a)) ln(1/a)

    Within G1_CLOSED_SWITCH of a = 1 the terms cancel to leading order, so
    the defining integral is used instead.

    Raises:
        DomainError: Outside (0, 1)
    """
    if not (0.0 < a < 1.0):
        raise DomainError(f"G1_closed needs a in (0, 1), got {a!r}")
    if 1.0 - a < G1_CLOSED_SWITCH:
        return G1_quadrature(a, tol=1e-13, rel_tol=1e-13)

    x = math.sqrt(1.0 - a)
    y = math.sqrt(a)
    arctan_term = 2.0 * (y / x) * math.atan(x / y)
    # (1+x)/(1-x) = (1+x)²/a since (1+x)(1-x) = a
    log_term = (2.0 * math.log1p(x) - math.log(a)) / x
    ratio_term = -(1.0 + a) * math.log(a) / (1.0 - a)
    return arctan_term + log_term - ratio_term


class Lemma4Helpers(NamedTuple):
    G: float
    g: float
    h: float
    k: float


def lemma4_helpers(x: float) -> Lemma4Helpers:
    """
    The functions used to show G₁ is increasing, all evaluated at x > 0

    G(b) = G₁(1/(1+b²)) with b = √((1-a)/a), g(b) = (b²/2) G'(b),
    h(c) = c g'(√c) and k(c) = -√(c(1+c)) + log(√c + √(1+c)).
    G and g read x as b, h and k read x as c.
    """
    if not x > 0.0:
        raise DomainError(f"helper argument must be positive, got {x!r}")
    b = c = x
    root_b = math.sqrt(1.0 + b * b)
    big_g = (
        2.0 / b * math.atan(b)
        + 2.0 * root_b / b * math.asinh(b)
        - (2.0 + b * b) / (b * b) * math.log1p(b * b)
    )
    small_g = -math.atan(b) - math.asinh(b) / root_b + 2.0 / b * math.log1p(b * b)
    h = 2.0 * c / (1.0 + c) + (c / (1.0 + c)) ** 1.5 * math.asinh(math.sqrt(c)) - 2.0 * math.log1p(c)
    k = -math.sqrt(c * (1.0 + c)) + math.asinh(math.sqrt(c))
    return Lemma4Helpers(big_g, small_g, h, k)


# ---------------------------------------------------------------------------
# Beta-function evaluation and sharpness
# ---------------------------------------------------------------------------

def main_bound_rhs(order, tol: float = DEFAULT_ABS_TOL, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """
    (1-α) ∫_0^∞ [(1+w)^{α-3/2} - (1+w)^{α-2}] w^{-α} dw by quadrature

    Equals β(α) - 1 through B(x, y) = ∫_0^∞ t^{x-1}(1+t)^{-x-y} dt.
    """
    alpha = _order(order).alpha

    def integrand(w: np.ndarray) -> np.ndarray:
        # (1+w)^{α-2}(√(1+w)-1) w^{-α} = (1+w)^{α-2} w^{1-α} / (√(1+w)+1)
        return (1.0 + w) ** (alpha - 2.0) * w ** (1.0 - alpha) / (np.sqrt(1.0 + w) + 1.0)

    result = integrate_halfline(integrand, sing0=-alpha, tol=tol, rel_tol=rel_tol)
    return (1.0 - alpha) * result.value


def extremal_limit(
    T: float,
    gamma: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """
    lim_{r→1} ℓ(r,θ)/|k_α(re^{iθ})| with T = 2(1-cos θ):

        T^{(1+γ)/2} ∫_0^1 √((1+γu)²-γTu) / ((1-u)²+Tu)^{1+γ/2} du

    Evaluated after w = Tu/(1-u)², which turns the peak at u = 1 for small T
    into a half-line integral with T^{-1/2}(1-u) = 2/(√(T+4w)+√T).
    """
    _check_chord("T", T)
    _check_gamma(gamma)
    sqrt_t = math.sqrt(T)

    def integrand(w: np.ndarray) -> np.ndarray:
        denom = np.sqrt(T + 4.0 * w) + sqrt_t
        u = 1.0 - 2.0 * sqrt_t / denom
        numerator = np.sqrt(np.maximum((1.0 + gamma * u) ** 2 - gamma * T * u, 0.0))
        return numerator / (1.0 + u) * (2.0 / denom) ** (1.0 - gamma) * (1.0 + w) ** (-1.0 - 0.5 * gamma)

    return integrate_halfline(integrand, sing0=-0.5 * (1.0 - gamma), tol=tol, rel_tol=rel_tol).value


def extremal_limit_u(
    T: float,
    gamma: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """extremal_limit evaluated directly in u; only practical for moderate T"""
    _check_chord("T", T)
    _check_gamma(gamma)
    scale = T ** (0.5 * (1.0 + gamma))

    def integrand(u: np.ndarray) -> np.ndarray:
        numerator = np.sqrt(np.maximum((1.0 + gamma * u) ** 2 - gamma * T * u, 0.0))
        return scale * numerator / ((1.0 - u) ** 2 + T * u) ** (1.0 + 0.5 * gamma)

    return integrate_graded(integrand, 0.0, 1.0, _peak_width(T), tol=tol, rel_tol=rel_tol).value


def extremal_ratio_direct(
    order,
    r: float,
    theta: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """gh_ratio of k_α(z) = z/(1-z)^{2-2α} at (r, θ)"""
    return gh_ratio(koebe_map(_order(order)), r, theta, tol, rel_tol)


class SharpnessRow(NamedTuple):
    T: float
    limit: float
    beta: float


def sharpness_table(
    order,
    T_min: float,
    steps_per_decade: int = 1,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> List[SharpnessRow]:
    """
    extremal_limit for T geometric from 1 down to T_min

    Returns:
        list: SharpnessRow(T, limit, β(α)) in decreasing T
    """
    if not (0.0 < T_min <= 1.0):
        raise DomainError(f"T_min must lie in (0, 1], got {T_min!r}")
    if steps_per_decade < 1:
        raise DomainError(f"steps_per_decade must be >= 1, got {steps_per_decade!r}")
    order = _order(order)
    beta = hall_constant(order)

    values = []
    k = 0
    while True:
        T = 10.0 ** (-k / steps_per_decade)
        if T < T_min * (1.0 - 1e-12):
            break
        values.append(T)
        k += 1
    if values[-1] > T_min * (1.0 + 1e-12):
        values.append(T_min)

    rows = [SharpnessRow(T, extremal_limit(T, order.gamma_param, tol, rel_tol), beta) for T in values]
    limits = [row.limit for row in rows]
    if any(later < earlier for earlier, later in zip(limits, limits[1:])):
        logger.info(f"ℹ️ Sharpness limits are not monotone as T decreases for alpha={order.alpha}")
    return rows
