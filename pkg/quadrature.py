"""
Quadrature Module
Adaptive Gauss-Kronrod integration over finite intervals with algebraic
endpoint singularities and over the half-line [0, ∞)
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from errors import DomainError, NonFiniteIntegrandError, QuadratureConvergenceError
from hall_config import DEFAULT_ABS_TOL, DEFAULT_REL_TOL, get_max_evals

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

# 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15)
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
_KRONROD_WEIGHTS = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
_gauss_half = np.array([0.0, _WG[0], 0.0, _WG[1], 0.0, _WG[2], 0.0])
_GAUSS_WEIGHTS = np.concatenate([_gauss_half, [_WG[3]], _gauss_half[::-1]])

NODES_PER_PANEL = _NODES.size
INITIAL_PANELS = 4
MIN_PANEL_WIDTH = 1e-14
MAX_GRADED_LEVELS = 60
_ROUNDOFF = 50.0 * np.finfo(float).eps

# integrands of interest decay like w^{-3/2}
DEFAULT_DECAY = -1.5


@dataclass(frozen=True)
class QuadResult:
    """Integral value with its error estimate and evaluation count"""

    value: float
    err_estimate: float
    evals: int

    def __post_init__(self):
        if not self.err_estimate >= 0.0:
            raise DomainError(f"err_estimate must be >= 0, got {self.err_estimate!r}")
        if self.evals < 1:
            raise DomainError(f"evals must be >= 1, got {self.evals!r}")


@dataclass(frozen=True)
class SingularitySpec:
    """
    Algebraic endpoint behaviour (u-a)^left_exponent and (b-u)^right_exponent

    Exponents >= 0 are treated as regular endpoints.
    """

    left_exponent: float = 0.0
    right_exponent: float = 0.0

    def __post_init__(self):
        for name in ("left_exponent", "right_exponent"):
            value = getattr(self, name)
            if not value > -1.0:
                raise DomainError(f"{name} must be > -1 for integrability, got {value!r}")


REGULAR = SingularitySpec()


class _Piece:
    """
    One sub-problem mapped onto σ ∈ [0, 1]

    kind is "linear", "left" (u = a + L σ^q) or "right" (u = b - L σ^q).
    """

    def __init__(self, f: Integrand, kind: str, anchor: float, length: float, power: float = 1.0):
        self.f = f
        self.kind = kind
        self.anchor = anchor
        self.length = length
        self.power = power

    def values(self, sigma: np.ndarray) -> np.ndarray:
        if self.kind == "linear":
            u = self.anchor + self.length * sigma
            jac = np.full_like(sigma, self.length)
        else:
            q = self.power
            step = self.length * sigma ** q
            u = self.anchor + step if self.kind == "left" else self.anchor - step
            jac = self.length * q * sigma ** (q - 1.0)

        flat_u = u.ravel()
        with np.errstate(all="ignore"):
            fu = np.asarray(self.f(flat_u), dtype=float)
            fu = np.broadcast_to(fu, flat_u.shape).reshape(u.shape)
            vals = fu * jac
        # jacobian underflow at the singular end: the substituted integrand is bounded there
        vals = np.where(jac == 0.0, 0.0, vals)

        bad = ~np.isfinite(vals)
        if bad.any():
            raise NonFiniteIntegrandError(f"integrand is not finite at u={u[bad][0]!r}")
        return vals


def _pieces_for(f: Integrand, a: float, b: float, sing: SingularitySpec) -> List[_Piece]:
    left = sing.left_exponent < 0.0
    right = sing.right_exponent < 0.0
    q_left = 1.0 / (1.0 + sing.left_exponent)
    q_right = 1.0 / (1.0 + sing.right_exponent)

    if left and right:
        mid = 0.5 * (a + b)
        return [
            _Piece(f, "left", a, mid - a, q_left),
            _Piece(f, "right", b, b - mid, q_right),
        ]
    if left:
        return [_Piece(f, "left", a, b - a, q_left)]
    if right:
        return [_Piece(f, "right", b, b - a, q_right)]
    return [_Piece(f, "linear", a, b - a)]


def _evaluate_panels(pieces, piece_idx, lo, hi):
    """Kronrod estimate and |K15 - G7| error for every panel"""
    est = np.empty(lo.size)
    err = np.empty(lo.size)
    for k, piece in enumerate(pieces):
        sel = piece_idx == k
        if not sel.any():
            continue
        center = 0.5 * (lo[sel] + hi[sel])
        half = 0.5 * (hi[sel] - lo[sel])
        sigma = center[:, None] + half[:, None] * _NODES[None, :]
        vals = piece.values(sigma)

        kronrod = half * (vals @ _KRONROD_WEIGHTS)
        gauss = half * (vals @ _GAUSS_WEIGHTS)
        resabs = half * (np.abs(vals) @ _KRONROD_WEIGHTS)
        est[sel] = kronrod
        err[sel] = np.maximum(np.abs(kronrod - gauss), _ROUNDOFF * resabs)
    return est, err


def _adaptive(pieces: List[_Piece], abs_tol: float, rel_tol: float, max_evals: int) -> QuadResult:
    n0 = INITIAL_PANELS
    edges = np.linspace(0.0, 1.0, n0 + 1)
    piece_idx = np.repeat(np.arange(len(pieces)), n0)
    lo = np.tile(edges[:-1], len(pieces))
    hi = np.tile(edges[1:], len(pieces))
    total_width = float(len(pieces))

    evals = NODES_PER_PANEL * lo.size
    est, err = _evaluate_panels(pieces, piece_idx, lo, hi)

    while True:
        total = float(est.sum())
        total_err = float(err.sum())
        target = max(abs_tol, rel_tol * abs(total))
        if total_err <= target:
            break

        width = hi - lo
        splittable = width > MIN_PANEL_WIDTH
        split = splittable & (err > target * width / total_width)
        if not split.any():
            candidates = np.where(splittable, err, -1.0)
            worst = int(np.argmax(candidates))
            if candidates[worst] <= 0.0:
                raise QuadratureConvergenceError(
                    f"panel resolution limit reached: value={total!r}, "
                    f"err_estimate={total_err:.3e} > target={target:.3e}",
                    QuadResult(total, total_err, evals),
                )
            split[worst] = True

        n_split = int(split.sum())
        if evals + 2 * NODES_PER_PANEL * n_split > max_evals:
            partial = QuadResult(total, total_err, evals)
            raise QuadratureConvergenceError(
                f"evaluation budget of {max_evals} exhausted: value={total!r}, "
                f"err_estimate={total_err:.3e} > target={target:.3e}",
                partial,
            )

        mid = 0.5 * (lo[split] + hi[split])
        new_lo = np.concatenate([lo[split], mid])
        new_hi = np.concatenate([mid, hi[split]])
        new_idx = np.concatenate([piece_idx[split], piece_idx[split]])
        new_est, new_err = _evaluate_panels(pieces, new_idx, new_lo, new_hi)
        evals += 2 * NODES_PER_PANEL * n_split

        keep = ~split
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        piece_idx = np.concatenate([piece_idx[keep], new_idx])
        est = np.concatenate([est[keep], new_est])
        err = np.concatenate([err[keep], new_err])

    logger.debug(f"quadrature done: value={total!r} err={total_err:.3e} evals={evals} panels={lo.size}")
    return QuadResult(total, total_err, evals)


def integrate_finite(
    f: Integrand,
    a: float,
    b: float,
    sing: SingularitySpec = REGULAR,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    max_evals: Optional[int] = None,
) -> QuadResult:
    """
    Integrate f over [a, b]

    Endpoints with a negative exponent in `sing` are removed by the power
    substitution u = a + (b-a) σ^{1/(1+p)} (mirrored at b); both-sided
    problems are split at the midpoint first.

    Args:
        f: Vectorised integrand, called with 1-D numpy arrays of nodes
        a, b: Finite interval with a < b
        sing: Endpoint exponents
        tol: Absolute tolerance
        rel_tol: Relative tolerance; the run stops once
            err_estimate <= max(tol, rel_tol * |value|)
        max_evals: Evaluation budget (defaults to HALLGH_MAX_EVALS)

    Returns:
        QuadResult: value, error estimate and number of integrand evaluations

    Raises:
        QuadratureConvergenceError: If the budget runs out or the panels reach
            MIN_PANEL_WIDTH before the tolerance is met
    """
    a = float(a)
    b = float(b)
    if not (np.isfinite(a) and np.isfinite(b) and a < b):
        raise DomainError(f"integrate_finite requires finite a < b, got [{a!r}, {b!r}]")
    if max_evals is None:
        max_evals = get_max_evals()
    return _adaptive(_pieces_for(f, a, b, sing), float(tol), float(rel_tol), int(max_evals))


def integrate_graded(
    f: Integrand,
    a: float,
    b: float,
    scale: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    max_evals: Optional[int] = None,
) -> QuadResult:
    """
    Integrate f over [a, b] on a mesh graded geometrically toward b

    Panels [b - h, b - h/2] with h halving from (b-a)/2 until h < scale/4;
    for integrands with a bounded peak of width `scale` at the right end
    that plain bisection from a coarse start would step over.

    Returns:
        QuadResult: Summed values, error estimates and evaluations
    """
    a = float(a)
    b = float(b)
    if not (np.isfinite(a) and np.isfinite(b) and a < b):
        raise DomainError(f"integrate_graded requires finite a < b, got [{a!r}, {b!r}]")
    if not scale > 0.0:
        raise DomainError(f"scale must be positive, got {scale!r}")

    edges = [a]
    h = 0.5 * (b - a)
    while h > 0.25 * scale and len(edges) < MAX_GRADED_LEVELS:
        edges.append(b - h)
        h *= 0.5
    edges.append(b)

    n_panels = len(edges) - 1
    value = err = 0.0
    evals = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        part = integrate_finite(f, lo, hi, REGULAR, tol / n_panels, rel_tol, max_evals)
        value += part.value
        err += part.err_estimate
        evals += part.evals
    return QuadResult(value, err, evals)


def halfline_transform(f: Integrand) -> Integrand:
    """Compactified integrand v -> f(v/(1-v)) / (1-v)^2 on [0, 1)"""

    def transformed(v: np.ndarray) -> np.ndarray:
        one_minus = 1.0 - v
        return f(v / one_minus) / (one_minus * one_minus)

    return transformed


def _check_tail(f: Integrand) -> None:
    """Warn when w·f(w) does not shrink on a sample of the tail"""
    w = np.array([1e4, 1e6, 1e8])
    with np.errstate(all="ignore"):
        scaled = np.abs(w * np.asarray(f(w), dtype=float))
    if not np.all(np.isfinite(scaled)):
        logger.warning("⚠️ Half-line integrand is not finite on its tail sample")
        return
    if scaled[-1] > 0.0 and scaled[-1] >= scaled[-2]:
        logger.warning(
            f"⚠️ Half-line integrand may diverge: |w f(w)| = {scaled.tolist()} at w = {w.tolist()}"
        )


def integrate_halfline(
    f: Integrand,
    sing0: float = 0.0,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    max_evals: Optional[int] = None,
    decay: float = DEFAULT_DECAY,
) -> QuadResult:
    """
    Integrate f over [0, ∞) through w = v/(1-v)

    Args:
        f: Vectorised integrand with f(w) ~ w^{sing0} near 0
        sing0: Exponent of the behaviour at w = 0, > -1
        decay: Exponent of the decay at infinity, < -1; the image endpoint
            v = 1 then behaves like (1-v)^{-decay-2}

    Returns:
        QuadResult: As integrate_finite
    """
    if not sing0 > -1.0:
        raise DomainError(f"sing0 must be > -1, got {sing0!r}")
    if not decay < -1.0:
        raise DomainError(f"decay must be < -1 for convergence, got {decay!r}")
    _check_tail(f)
    sing = SingularitySpec(left_exponent=sing0, right_exponent=-decay - 2.0)
    return integrate_finite(halfline_transform(f), 0.0, 1.0, sing, tol, rel_tol, max_evals)
