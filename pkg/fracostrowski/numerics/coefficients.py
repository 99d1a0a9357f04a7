"""
The lambda coefficient family of the fractional Ostrowski bounds.

Each coefficient is a moment integral

    int_0^1 t^p (1 - t)^r / (t theta + (1 - t) x)^(2 vartheta) dt

written in closed form through the Beta function and 2F1. The moment_*
functions evaluate the same integrals by direct quadrature and serve as
oracles for the closed forms.
"""
import logging
import math
from dataclasses import dataclass

from fracostrowski.errors import DomainError

from .specfun import HypArgs, beta_fn, hyp2f1
from .quadrature import (
    DEFAULT_QUADRATURE_OPTIONS,
    QuadratureOptions,
    integrate_value
)


LOGGER = logging.getLogger(__name__)


class Orientation:
    LEFT = 'left'
    RIGHT = 'right'


@dataclass(frozen=True)
class LambdaInputs:
    theta: float
    x: float
    s: float
    vartheta: float
    rho: float

    def __post_init__(self):
        for name in ('theta', 'x', 's', 'vartheta', 'rho'):
            if not math.isfinite(getattr(self, name)):
                raise DomainError('%s must be finite' % name)
        if self.theta <= 0 or self.x <= 0:
            raise DomainError(
                'theta and x must be positive, got theta=%r, x=%r' % (self.theta, self.x)
            )
        # s = 0 is admitted: the Hoelder-type bound evaluates lambda_1, lambda_3 at s = 0
        if not 0 <= self.s <= 1:
            raise DomainError('s must be in [0, 1], got %r' % self.s)
        if self.vartheta <= 0:
            raise DomainError('vartheta must be positive, got %r' % self.vartheta)
        if self.rho < 0:
            raise DomainError('rho must be nonnegative, got %r' % self.rho)

    def check_orientation(self, orientation: str):
        if orientation == Orientation.LEFT and not self.theta <= self.x:
            raise DomainError('left coefficients require theta <= x')
        if orientation == Orientation.RIGHT and not self.x <= self.theta:
            raise DomainError('right coefficients require x <= theta')


def _moment(
        inputs: LambdaInputs, t_power: float, one_minus_t_power: float,
        options: QuadratureOptions) -> float:
    theta, x = inputs.theta, inputs.x
    exponent = 2 * inputs.vartheta
    return integrate_value(
        lambda t: (t * theta + (1 - t) * x) ** -exponent,
        0.0, 1.0,
        options=options,
        algebraic_weight=(t_power, one_minus_t_power)
    )


def moment_ts(
        theta: float, x: float, s: float, vartheta: float, rho: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    """int_0^1 t^(rho+s) / (t theta + (1-t) x)^(2 vartheta) dt by quadrature."""
    inputs = LambdaInputs(theta=theta, x=x, s=s, vartheta=vartheta, rho=rho)
    return _moment(inputs, inputs.rho + inputs.s, 0.0, options)


def moment_t_1mt(
        theta: float, x: float, s: float, vartheta: float, rho: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    """int_0^1 t^rho (1-t)^s / (t theta + (1-t) x)^(2 vartheta) dt by quadrature."""
    inputs = LambdaInputs(theta=theta, x=x, s=s, vartheta=vartheta, rho=rho)
    return _moment(inputs, inputs.rho, inputs.s, options)


def _closed_form(
        scale: float, vartheta: float,
        beta_args, hyp_b: float, hyp_c: float, z: float) -> float:
    return (
        beta_fn(*beta_args) / scale ** (2 * vartheta)
        * hyp2f1(HypArgs(a=2 * vartheta, b=hyp_b, c=hyp_c, z=z))
    )


def lambda1(a: float, x: float, s: float, vartheta: float, rho: float) -> float:
    inputs = LambdaInputs(theta=a, x=x, s=s, vartheta=vartheta, rho=rho)
    inputs.check_orientation(Orientation.LEFT)
    return _closed_form(
        x, vartheta,
        beta_args=(rho + s + 1, 1),
        hyp_b=rho + s + 1, hyp_c=rho + s + 2, z=1 - a / x
    )


def lambda2(a: float, x: float, s: float, vartheta: float, rho: float) -> float:
    inputs = LambdaInputs(theta=a, x=x, s=s, vartheta=vartheta, rho=rho)
    inputs.check_orientation(Orientation.LEFT)
    return _closed_form(
        x, vartheta,
        beta_args=(rho + 1, s + 1),
        hyp_b=rho + 1, hyp_c=rho + s + 2, z=1 - a / x
    )


def lambda3(b: float, x: float, s: float, vartheta: float, rho: float) -> float:
    inputs = LambdaInputs(theta=b, x=x, s=s, vartheta=vartheta, rho=rho)
    inputs.check_orientation(Orientation.RIGHT)
    return _closed_form(
        b, vartheta,
        beta_args=(1, rho + s + 1),
        hyp_b=1, hyp_c=rho + s + 2, z=1 - x / b
    )


def lambda4(b: float, x: float, s: float, vartheta: float, rho: float) -> float:
    inputs = LambdaInputs(theta=b, x=x, s=s, vartheta=vartheta, rho=rho)
    inputs.check_orientation(Orientation.RIGHT)
    return _closed_form(
        b, vartheta,
        beta_args=(s + 1, rho + 1),
        hyp_b=s + 1, hyp_c=rho + s + 2, z=1 - x / b
    )


def _check_alpha(alpha: float):
    if not (math.isfinite(alpha) and alpha > 0):
        raise DomainError('alpha must be positive, got %r' % alpha)


def lambda5(a: float, x: float, alpha: float) -> float:
    """(alpha + 1) * int_0^1 t^alpha / (t a + (1-t) x)^2 dt."""
    _check_alpha(alpha)
    LambdaInputs(theta=a, x=x, s=0, vartheta=1, rho=alpha).check_orientation(Orientation.LEFT)
    return hyp2f1(HypArgs(a=2, b=alpha + 1, c=alpha + 2, z=1 - a / x)) / x ** 2


def lambda6(b: float, x: float, alpha: float) -> float:
    """(alpha + 1) * int_0^1 t^alpha / (t b + (1-t) x)^2 dt."""
    _check_alpha(alpha)
    LambdaInputs(theta=b, x=x, s=0, vartheta=1, rho=alpha).check_orientation(Orientation.RIGHT)
    return hyp2f1(HypArgs(a=2, b=1, c=alpha + 2, z=1 - x / b)) / b ** 2


def lambda5_log(theta: float, x: float) -> float:
    """
    Logarithmic form of int_0^1 t / (t theta + (1-t) x)^2 dt, i.e. lambda5 / 2
    (or lambda6 / 2) at alpha = 1; the value at theta = x is the limit 1 / (2 x^2).
    """
    if theta <= 0 or x <= 0:
        raise DomainError('theta and x must be positive')
    if theta == x:
        return 0.5 / x ** 2
    return (1 / (x - theta)) * (1 / theta - (math.log(x) - math.log(theta)) / (x - theta))
