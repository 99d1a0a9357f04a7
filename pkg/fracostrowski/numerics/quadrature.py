"""
Adaptive one-dimensional quadrature and Riemann-Liouville fractional
integrals.

The fractional integrals are evaluated after the substitution
t = y - (y - c) w^(1/alpha), which turns the weakly singular kernel
(y - t)^(alpha - 1) into a bounded integrand on [0, 1]:

    J_{c+}^alpha h(y) = (y - c)^alpha / Gamma(alpha + 1)
                        * int_0^1 h(y - (y - c) w^(1/alpha)) dw
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from scipy import integrate as scipy_integrate

from fracostrowski.errors import (
    DomainError,
    NonFiniteSampleError,
    QuadratureDepthExceededError,
    QuadratureError
)

from .specfun import gamma_fn


LOGGER = logging.getLogger(__name__)


DEFAULT_REL_TOL = 1e-10
DEFAULT_ABS_TOL = 1e-12
DEFAULT_MAX_SUBDIVISIONS = 60

T_Integrand = Callable[[float], float]


SUBDIVISION_LIMIT_MESSAGE = 'maximum number of subdivisions'


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class FractionalOrder:
    alpha: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0):
            raise DomainError('fractional order must be positive, got %r' % self.alpha)


@dataclass(frozen=True)
class QuadratureOptions:
    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS


DEFAULT_QUADRATURE_OPTIONS = QuadratureOptions()


def _finite_sampling(f: T_Integrand) -> T_Integrand:
    def _sample(t: float) -> float:
        value = f(t)
        if not math.isfinite(value):
            raise NonFiniteSampleError(point=t, value=value)
        return value
    return _sample


def integrate(
        f: T_Integrand,
        lo: float,
        hi: float,
        rel_tol: float = DEFAULT_REL_TOL,
        abs_tol: float = DEFAULT_ABS_TOL,
        max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS,
        algebraic_weight: Optional[Tuple[float, float]] = None) -> QuadResult:
    """
    Integrates f over [lo, hi] with adaptive Gauss-Kronrod panels.

    With `algebraic_weight=(mu, nu)` the integrand is f(t) (t-lo)^mu (hi-t)^nu,
    the weight being integrated exactly by the rule (mu, nu > -1).

    Raises QuadratureDepthExceededError when the subdivision cap is reached
    before the error estimate drops below max(abs_tol, rel_tol * |value|).
    """
    if not lo <= hi:
        raise DomainError('integrate requires lo <= hi, got [%r, %r]' % (lo, hi))
    if rel_tol <= 0 or abs_tol <= 0:
        raise DomainError('tolerances must be positive')
    if lo == hi:
        return QuadResult(value=0.0, error_estimate=0.0, evaluations=1)
    kwargs = {}
    if algebraic_weight is not None:
        kwargs = {'weight': 'alg', 'wvar': algebraic_weight}
    value, error_estimate, info, *messages = scipy_integrate.quad(
        _finite_sampling(f), lo, hi,
        epsabs=abs_tol, epsrel=rel_tol, limit=max_subdivisions,
        full_output=1,
        **kwargs
    )
    if messages:
        message = messages[0]
        LOGGER.debug('quadpack message: %s', message)
        if (
                SUBDIVISION_LIMIT_MESSAGE in message
                or info.get('last', 0) >= max_subdivisions):
            raise QuadratureDepthExceededError(
                'subdivision cap %d reached on [%r, %r] (error estimate: %.3g)' % (
                    max_subdivisions, lo, hi, error_estimate
                )
            )
        raise QuadratureError(
            'quadrature failed on [%r, %r]: %s' % (lo, hi, message)
        )
    return QuadResult(
        value=float(value),
        error_estimate=abs(float(error_estimate)),
        evaluations=max(1, int(info['neval']))
    )


def integrate_value(
        f: T_Integrand, lo: float, hi: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS,
        **kwargs) -> float:
    return integrate(
        f, lo, hi,
        rel_tol=options.rel_tol,
        abs_tol=options.abs_tol,
        max_subdivisions=options.max_subdivisions,
        **kwargs
    ).value


def _regularized_integral(
        h: T_Integrand,
        origin: float,
        span: float,
        order: FractionalOrder,
        options: QuadratureOptions) -> float:
    # span carries the direction: origin + span * w^(1/alpha) runs from y to c
    inverse_alpha = 1.0 / order.alpha
    integral = integrate_value(
        lambda w: h(origin + span * w ** inverse_alpha), 0.0, 1.0,
        options=options
    )
    return abs(span) ** order.alpha / gamma_fn(order.alpha + 1.0) * integral


def rl_left(
        h: T_Integrand, c: float, order: FractionalOrder, y: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    """
    Left-sided Riemann-Liouville integral
    J_{c+}^alpha h(y) = 1/Gamma(alpha) int_c^y (y - t)^(alpha - 1) h(t) dt.
    """
    if not y > c:
        raise DomainError('rl_left requires y > c, got c=%r, y=%r' % (c, y))
    return _regularized_integral(h, origin=y, span=-(y - c), order=order, options=options)


def rl_right(
        h: T_Integrand, c: float, order: FractionalOrder, y: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    """
    Right-sided Riemann-Liouville integral
    J_{c-}^alpha h(y) = 1/Gamma(alpha) int_y^c (t - y)^(alpha - 1) h(t) dt.
    """
    if not y < c:
        raise DomainError('rl_right requires y < c, got c=%r, y=%r' % (c, y))
    return _regularized_integral(h, origin=y, span=c - y, order=order, options=options)


def rl_identity(h: T_Integrand, y: float) -> float:
    # J^0 h = h; alpha = 0 is not a FractionalOrder
    return h(y)
