"""
The integer-order (alpha = 1) Ostrowski quantities for harmonically
s-convex |f'|^q, written in their classical form:

    deviation = f(x) - ab/(b-a) int_a^b f(u)/u^2 du

The fractional functional satisfies S_f = (b-a)/(ab) * deviation at alpha = 1,
and each fractional bound reduces to (b-a)/(ab) times its classical
counterpart below.
"""
import logging

from fracostrowski.functions.catalog import TestFunction
from fracostrowski.numerics.coefficients import (
    lambda1,
    lambda2,
    lambda3,
    lambda4,
    lambda5_log
)
from fracostrowski.numerics.quadrature import (
    DEFAULT_QUADRATURE_OPTIONS,
    QuadratureOptions,
    integrate_value
)

from .ostrowski import DerivMagnitudes, Interval


LOGGER = logging.getLogger(__name__)


def _harmonic_scale(iv: Interval) -> float:
    return iv.a * iv.b / (iv.b - iv.a)


def classical_deviation(
        fn: TestFunction, iv: Interval,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    f = fn.f
    weighted_mean = _harmonic_scale(iv) * integrate_value(
        lambda u: float(f(u)) / u ** 2, iv.a, iv.b, options=options
    )
    return float(fn.f(iv.x)) - weighted_mean


def _classical_kernel(
        fn: TestFunction, theta: float, x: float,
        options: QuadratureOptions) -> float:
    fprime = fn.fprime

    def _integrand(t: float) -> float:
        denominator = t * theta + (1 - t) * x
        return t * float(fprime(theta * x / denominator)) / denominator ** 2

    return integrate_value(_integrand, 0.0, 1.0, options=options)


def classical_identity_rhs(
        fn: TestFunction, iv: Interval,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    a, b, x = iv.a, iv.b, iv.x
    return _harmonic_scale(iv) * (
        (x - a) ** 2 * _classical_kernel(fn, a, x, options)
        - (b - x) ** 2 * _classical_kernel(fn, b, x, options)
    )


def _sides(iv: Interval, left, right) -> float:
    total = 0.0
    if iv.has_left_side:
        total += (iv.x - iv.a) ** 2 * left()
    if iv.has_right_side:
        total += (iv.b - iv.x) ** 2 * right()
    return _harmonic_scale(iv) * total


def _mixed_power_sum(c_x: float, d_x: float, c_end: float, d_end: float, q: float):
    return (c_x * d_x ** q + c_end * d_end ** q) ** (1 / q)


def _power_mean_sides(d: DerivMagnitudes, iv: Interval, s: float, q: float, vartheta, rho):
    a, b, x = iv.a, iv.b, iv.x
    return _sides(
        iv,
        lambda: _mixed_power_sum(
            lambda1(a, x, s, vartheta, rho), d.at_x,
            lambda2(a, x, s, vartheta, rho), d.at_a, q
        ),
        lambda: _mixed_power_sum(
            lambda3(b, x, s, vartheta, rho), d.at_x,
            lambda4(b, x, s, vartheta, rho), d.at_b, q
        )
    )


def classical_bound_16(d: DerivMagnitudes, iv: Interval, s: float, q: float) -> float:
    return _power_mean_sides(d, iv, s, q, vartheta=q, rho=q)


def classical_bound_17(d: DerivMagnitudes, iv: Interval, s: float, q: float) -> float:
    return (1 / 2) ** (1 - 1 / q) * _power_mean_sides(d, iv, s, q, vartheta=q, rho=1)


def classical_bound_18(d: DerivMagnitudes, iv: Interval, s: float, q: float) -> float:
    a, b, x = iv.a, iv.b, iv.x
    exponent = 1 - 1 / q
    return _sides(
        iv,
        lambda: lambda5_log(a, x) ** exponent * _mixed_power_sum(
            lambda1(a, x, s, 1, 1), d.at_x, lambda2(a, x, s, 1, 1), d.at_a, q
        ),
        lambda: lambda5_log(b, x) ** exponent * _mixed_power_sum(
            lambda3(b, x, s, 1, 1), d.at_x, lambda4(b, x, s, 1, 1), d.at_b, q
        )
    )


def classical_bound_19(d: DerivMagnitudes, iv: Interval, s: float, q: float) -> float:
    p = q / (q - 1)
    return (1 / (p + 1)) ** (1 / p) * _power_mean_sides(d, iv, s, q, vartheta=q, rho=0)


def classical_bound_110(d: DerivMagnitudes, iv: Interval, s: float, q: float) -> float:
    a, b, x = iv.a, iv.b, iv.x
    p = q / (q - 1)
    return _sides(
        iv,
        lambda: (
            lambda1(a, x, 0, p, p) ** (1 / p)
            * ((d.at_x ** q + d.at_a ** q) / (s + 1)) ** (1 / q)
        ),
        lambda: (
            lambda3(b, x, 0, p, p) ** (1 / p)
            * ((d.at_x ** q + d.at_b ** q) / (s + 1)) ** (1 / q)
        )
    )
