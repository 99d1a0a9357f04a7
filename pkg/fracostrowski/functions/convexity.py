"""
Grid certifier for harmonic s-convexity:

    g(xy / (tx + (1-t)y)) <= t^s g(y) + (1-t)^s g(x)

for x, y in [a, b] and t in [0, 1].
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from fracostrowski.errors import DomainError, NonFiniteSampleError

from .catalog import TestFunction


LOGGER = logging.getLogger(__name__)


DEFAULT_GRID_DENSITY = 64
MIN_GRID_DENSITY = 16
DEFAULT_CONVEXITY_TOLERANCE = 1e-10


@dataclass(frozen=True)
class ConvexityWitness:
    x: float
    y: float
    t: float
    violation: float


@dataclass(frozen=True)
class ConvexityVerdict:
    passed: bool
    witness: Optional[ConvexityWitness] = None


def harmonic_s_convexity_gap(g: Callable, x, y, t, s: float):
    """
    Left side minus right side of the definition; positive means violated.

    Scalars give a float, broadcastable arrays give an array of gaps.
    """
    gap = np.asarray(g(x * y / (t * x + (1 - t) * y)), dtype=float) - (
        t ** s * np.asarray(g(y), dtype=float)
        + (1 - t) ** s * np.asarray(g(x), dtype=float)
    )
    if gap.ndim == 0:
        return float(gap)
    return gap


def _evaluate(g: Callable, points: np.ndarray) -> np.ndarray:
    values = np.broadcast_to(np.asarray(g(points), dtype=float), points.shape)
    finite = np.isfinite(values)
    if not finite.all():
        index = np.unravel_index(np.argmin(finite), values.shape)
        raise NonFiniteSampleError(point=float(points[index]), value=float(values[index]))
    return values


def is_harmonically_s_convex(
        g: Callable,
        a: float,
        b: float,
        s: float,
        grid_density: int = DEFAULT_GRID_DENSITY,
        tolerance: float = DEFAULT_CONVEXITY_TOLERANCE) -> ConvexityVerdict:
    if not 0 < a < b:
        raise DomainError('certification requires 0 < a < b, got [%r, %r]' % (a, b))
    if not 0 < s <= 1:
        raise DomainError('s must be in (0, 1], got %r' % s)
    if grid_density < MIN_GRID_DENSITY:
        raise DomainError(
            'grid_density must be at least %d, got %d' % (MIN_GRID_DENSITY, grid_density)
        )
    nodes = np.linspace(a, b, grid_density)
    weights = np.linspace(0.0, 1.0, grid_density)
    x, y, t = np.meshgrid(nodes, nodes, weights, indexing='ij')
    harmonic_points = x * y / (t * x + (1 - t) * y)

    g_nodes = _evaluate(g, nodes)
    g_harmonic = _evaluate(g, harmonic_points)
    gap = harmonic_s_convexity_gap(g, x, y, t, s)

    scale = max(1.0, float(np.max(np.abs(g_nodes))), float(np.max(np.abs(g_harmonic))))
    worst = np.unravel_index(np.argmax(gap), gap.shape)
    worst_gap = float(gap[worst])
    LOGGER.debug(
        'certified grid of %d points on [%s, %s] (s=%s): worst gap %.3g (scale %.3g)',
        gap.size, a, b, s, worst_gap, scale
    )
    if worst_gap <= tolerance * scale:
        return ConvexityVerdict(passed=True)
    return ConvexityVerdict(
        passed=False,
        witness=ConvexityWitness(
            x=float(x[worst]), y=float(y[worst]), t=float(t[worst]),
            violation=worst_gap
        )
    )


def certify_test_function(
        fn: TestFunction,
        a: float,
        b: float,
        s: float,
        q: float,
        grid_density: int = DEFAULT_GRID_DENSITY) -> ConvexityVerdict:
    """Certifies harmonic s-convexity of |f'|^q on [a, b]."""
    verdict = is_harmonically_s_convex(
        fn.derivative_power(q), a, b, s, grid_density=grid_density
    )
    LOGGER.debug('certificate for %s (s=%s, q=%s): %s', fn, s, q, verdict)
    return verdict
