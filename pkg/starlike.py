"""
Starlike Maps Module
Closed-form starlike functions of order α built from atomic Herglotz measures,
ray-image lengths and Gehring-Hayman ratios
"""
import math
import logging
from dataclasses import dataclass, field
from typing import Iterable, Tuple, Union

import numpy as np

from errors import DegenerateMapError, DomainError
from hall_config import (
    DEFAULT_ABS_TOL,
    DEFAULT_REL_TOL,
    MAX_RADIUS,
    NODE_MERGE_TOL,
    WEIGHT_SUM_TOL,
)
from quadrature import integrate_graded
from specfun import OrderAlpha

logger = logging.getLogger(__name__)

ComplexLike = Union[complex, np.ndarray]

TINY_MODULUS = 1e-300


def wrap_angle(t: float) -> float:
    """Map an angle onto (-π, π]"""
    wrapped = math.pi - (math.pi - t) % (2.0 * math.pi)
    return math.pi if wrapped <= -math.pi else wrapped


@dataclass(frozen=True)
class HerglotzMeasure:
    """
    Atomic probability measure on (-π, π]

    Use from_atoms() to wrap nodes, merge duplicates and optionally normalize;
    the constructor only checks the invariants.
    """

    nodes: Tuple[float, ...]
    weights: Tuple[float, ...]
    _node_array: np.ndarray = field(init=False, repr=False, compare=False)
    _weight_array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nodes = tuple(float(t) for t in self.nodes)
        weights = tuple(float(w) for w in self.weights)
        if len(nodes) == 0 or len(nodes) != len(weights):
            raise DomainError("a Herglotz measure needs at least one atom and one weight per node")
        if any(not w > 0.0 for w in weights):
            raise DomainError(f"atom weights must be positive, got {weights}")
        if any(not (-math.pi < t <= math.pi) for t in nodes):
            raise DomainError(f"atom nodes must lie in (-pi, pi], got {nodes}")
        total = math.fsum(weights)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise DomainError(f"atom weights must sum to 1, got {total!r}")

        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_node_array", np.array(nodes))
        object.__setattr__(self, "_weight_array", np.array(weights))

    @classmethod
    def from_atoms(cls, atoms: Iterable[Tuple[float, float]], normalize: bool = False) -> "HerglotzMeasure":
        """
        Build a measure from (node, weight) pairs

        Nodes are wrapped onto (-π, π] and atoms closer than NODE_MERGE_TOL
        (around the circle) are merged by adding their weights.

        Args:
            atoms: Iterable of (t_j, λ_j)
            normalize: Rescale the weights to total mass 1

        Returns:
            HerglotzMeasure: Sorted by node
        """
        pairs = sorted((wrap_angle(float(t)), float(w)) for t, w in atoms)
        if not pairs:
            raise DomainError("a Herglotz measure needs at least one atom")
        if any(not w > 0.0 for _, w in pairs):
            raise DomainError("atom weights must be positive")

        merged = [list(pairs[0])]
        for t, w in pairs[1:]:
            if t - merged[-1][0] <= NODE_MERGE_TOL:
                merged[-1][1] += w
            else:
                merged.append([t, w])
        if len(merged) > 1 and (merged[0][0] + 2.0 * math.pi) - merged[-1][0] <= NODE_MERGE_TOL:
            merged[-1][1] += merged[0][1]
            merged.pop(0)

        weights = [w for _, w in merged]
        if normalize:
            total = math.fsum(weights)
            weights = [w / total for w in weights]
        return cls(tuple(t for t, _ in merged), tuple(weights))

    @classmethod
    def point_mass(cls, t: float = 0.0) -> "HerglotzMeasure":
        """Unit mass at one node"""
        return cls.from_atoms([(t, 1.0)])

    @property
    def node_array(self) -> np.ndarray:
        return self._node_array

    @property
    def weight_array(self) -> np.ndarray:
        return self._weight_array

    @property
    def atoms(self) -> Tuple[Tuple[float, float], ...]:
        return tuple(zip(self.nodes, self.weights))


@dataclass(frozen=True)
class StarlikeMap:
    """Starlike map of order α whose transfer function has the given measure"""

    measure: HerglotzMeasure
    order: OrderAlpha

    def __post_init__(self):
        if not isinstance(self.order, OrderAlpha):
            object.__setattr__(self, "order", OrderAlpha(self.order))


def koebe_map(order) -> StarlikeMap:
    """Extremal map k_α(z) = z/(1-z)^{2-2α} (unit mass at t = 0)"""
    return StarlikeMap(HerglotzMeasure.point_mass(0.0), order)


def rotate_measure(measure: HerglotzMeasure, theta0: float) -> HerglotzMeasure:
    """Shift every node by theta0; the map becomes e^{iθ0} f(e^{-iθ0} z)"""
    return HerglotzMeasure.from_atoms(((t + theta0, w) for t, w in measure.atoms), normalize=True)


def _disk_points(z: ComplexLike, allow_zero: bool = True) -> np.ndarray:
    points = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(points)):
        raise DomainError("points must be finite")
    if np.any(np.abs(points) >= 1.0):
        raise DomainError("points must lie in the open unit disk |z| < 1")
    if not allow_zero and np.any(points == 0):
        raise DomainError("the derivative formula f'(z) = f(z)H(z)/z needs z != 0; f'(0) = 1")
    return points


def _unpack(values: np.ndarray, z: ComplexLike) -> ComplexLike:
    return complex(values) if np.ndim(z) == 0 else values


def _zeta(m: StarlikeMap, points: np.ndarray) -> np.ndarray:
    """z e^{-i t_j}, shape (*z.shape, n_atoms)"""
    return points[..., None] * np.exp(-1j * m.measure.node_array)


def _transfer(m: StarlikeMap, points: np.ndarray) -> np.ndarray:
    zeta = _zeta(m, points)
    kernel = (1.0 + m.order.gamma_param * zeta) / (1.0 - zeta)
    return kernel @ m.measure.weight_array


def _map_over_z(m: StarlikeMap, points: np.ndarray) -> np.ndarray:
    """f(z)/z = Π_j (1 - z e^{-it_j})^{-(2-2α)λ_j}, principal branch"""
    zeta = _zeta(m, points)
    log_sum = np.log(1.0 - zeta) @ m.measure.weight_array
    return np.exp(-(2.0 - 2.0 * m.order.alpha) * log_sum)


def _map_prime(m: StarlikeMap, points: np.ndarray) -> np.ndarray:
    # f'(z) = (f(z)/z) H(z), also valid at z = 0
    return _map_over_z(m, points) * _transfer(m, points)


def transfer_H(m: StarlikeMap, z: ComplexLike) -> ComplexLike:
    """
    H(z) = z f'(z)/f(z) = Σ λ_j (1 + γ z e^{-it_j}) / (1 - z e^{-it_j})

    Raises:
        DomainError: If |z| >= 1
    """
    points = _disk_points(z)
    return _unpack(_transfer(m, points), z)


def eval_map(m: StarlikeMap, z: ComplexLike) -> ComplexLike:
    """f(z) = z Π_j (1 - z e^{-it_j})^{-(2-2α)λ_j}"""
    points = _disk_points(z)
    return _unpack(points * _map_over_z(m, points), z)


def eval_map_prime(m: StarlikeMap, z: ComplexLike) -> ComplexLike:
    """
    f'(z) = f(z) H(z) / z for 0 < |z| < 1

    Raises:
        DomainError: At z = 0 (where f'(0) = 1 by normalization) or |z| >= 1
    """
    points = _disk_points(z, allow_zero=False)
    return _unpack(_map_prime(m, points), z)


def branch_margin(m: StarlikeMap, z: ComplexLike) -> float:
    """Smallest Re(1 - z e^{-it_j}); positive means the principal logarithm is continuous"""
    points = _disk_points(z)
    return float(np.min((1.0 - _zeta(m, points)).real))


def ray_length(
    m: StarlikeMap,
    r: float,
    theta: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """
    Length ℓ(r, θ) = ∫_0^r |f'(ρ e^{iθ})| dρ of the image of a radius

    Args:
        m: Starlike map
        r: Radius in (0, 1)
        theta: Direction of the ray
        tol, rel_tol: Quadrature tolerances

    Returns:
        float: Arc length of the ray image

    Raises:
        DomainError: If r is outside (0, 1)
        QuadratureConvergenceError: If the quadrature budget runs out
    """
    if not (0.0 < r < 1.0):
        raise DomainError(f"radius must lie in (0, 1), got {r!r}")
    if r > MAX_RADIUS:
        logger.warning(f"⚠️ Radius {r!r} is beyond {MAX_RADIUS!r}; quadrature may exhaust its budget")

    direction = complex(math.cos(theta), math.sin(theta))
    # distance from the ray's end to the nearest boundary singularity
    scale = float(np.min(np.abs(np.exp(1j * m.measure.node_array) - r * direction)))

    def speed(rho: np.ndarray) -> np.ndarray:
        return np.abs(_map_prime(m, rho * direction))

    return integrate_graded(speed, 0.0, r, scale, tol=tol, rel_tol=rel_tol).value


def gh_ratio(
    m: StarlikeMap,
    r: float,
    theta: float,
    tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """
    Gehring-Hayman ratio ℓ(r, θ) / |f(r e^{iθ})|

    Raises:
        DegenerateMapError: If |f(r e^{iθ})| < 1e-300
    """
    length = ray_length(m, r, theta, tol, rel_tol)
    modulus = abs(eval_map(m, r * complex(math.cos(theta), math.sin(theta))))
    if modulus < TINY_MODULUS:
        raise DegenerateMapError(f"|f(re^(i theta))| = {modulus!r} at r={r!r}, theta={theta!r}")
    return length / modulus


def sample_measure(seed: int, n_atoms: int) -> HerglotzMeasure:
    """
    Seeded random atomic measure

    Nodes are uniform on (-π, π]; weights are exponential draws normalized
    to total mass 1.
    """
    if n_atoms < 1:
        raise DomainError(f"n_atoms must be >= 1, got {n_atoms!r}")
    rng = np.random.default_rng(seed)
    nodes = math.pi - 2.0 * math.pi * rng.random(n_atoms)
    weights = rng.exponential(1.0, n_atoms)
    return HerglotzMeasure.from_atoms(zip(nodes.tolist(), weights.tolist()), normalize=True)
