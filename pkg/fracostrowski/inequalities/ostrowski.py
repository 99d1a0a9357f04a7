"""
The fractional Ostrowski functional S_f, both sides of its integral
identity, the five upper bounds on |S_f| for functions with harmonically
s-convex |f'|^q, their corollary (|f'| <= M) forms and the fractional
Hermite-Hadamard check.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, NamedTuple, Optional, Tuple

from fracostrowski.errors import (
    DegenerateIntervalError,
    DomainError,
    UnknownTheoremError
)
from fracostrowski.functions.catalog import TestFunction
from fracostrowski.numerics.coefficients import (
    lambda1,
    lambda2,
    lambda3,
    lambda4,
    lambda5,
    lambda6
)
from fracostrowski.numerics.quadrature import (
    DEFAULT_QUADRATURE_OPTIONS,
    FractionalOrder,
    QuadratureOptions,
    integrate_value,
    rl_left,
    rl_right
)
from fracostrowski.numerics.specfun import gamma_fn


LOGGER = logging.getLogger(__name__)


DEFAULT_VIOLATION_SLACK = 1e-12
CONJUGATE_TOLERANCE = 1e-14


class BoundIds:
    B22 = 'b22'
    B23 = 'b23'
    B24 = 'b24'
    B25 = 'b25'
    B26 = 'b26'

    ALL = (B22, B23, B24, B25, B26)
    HOELDER = (B25, B26)


@dataclass(frozen=True)
class Interval:
    a: float
    b: float
    x: float

    def __post_init__(self):
        for name in ('a', 'b', 'x'):
            if not math.isfinite(getattr(self, name)):
                raise DomainError('%s must be finite' % name)
        if self.a == self.b:
            raise DegenerateIntervalError('degenerate interval a = b = %r' % self.a)
        if not 0 < self.a <= self.x <= self.b:
            raise DomainError(
                'interval requires 0 < a <= x <= b, got a=%r, x=%r, b=%r' % (
                    self.a, self.x, self.b
                )
            )

    @property
    def left_factor(self) -> Callable[[float], float]:
        return lambda alpha: (self.x - self.a) ** (alpha + 1) / (self.a * self.x) ** (alpha - 1)

    @property
    def right_factor(self) -> Callable[[float], float]:
        return lambda alpha: (self.b - self.x) ** (alpha + 1) / (self.b * self.x) ** (alpha - 1)

    @property
    def has_left_side(self) -> bool:
        return self.x > self.a

    @property
    def has_right_side(self) -> bool:
        return self.x < self.b


@dataclass(frozen=True)
class Params:
    alpha: float
    s: float
    q: float
    p: Optional[float] = None

    def __post_init__(self):
        FractionalOrder(self.alpha)
        if not 0 < self.s <= 1:
            raise DomainError('s must be in (0, 1], got %r' % self.s)
        if not (math.isfinite(self.q) and self.q >= 1):
            raise DomainError('q must be >= 1, got %r' % self.q)
        if self.q == 1:
            if self.p is not None:
                raise DomainError('the Hoelder conjugate p is undefined for q = 1')
            return
        if self.p is None:
            object.__setattr__(self, 'p', self.q / (self.q - 1))
        elif abs(1 / self.p + 1 / self.q - 1) > CONJUGATE_TOLERANCE:
            raise DomainError('p=%r is not the Hoelder conjugate of q=%r' % (self.p, self.q))

    @property
    def has_conjugate(self) -> bool:
        return self.q > 1


@dataclass(frozen=True)
class DerivMagnitudes:
    at_a: float
    at_b: float
    at_x: float

    def __post_init__(self):
        for name in ('at_a', 'at_b', 'at_x'):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise DomainError('%s must be finite and nonnegative, got %r' % (name, value))

    @staticmethod
    def from_function(fn: TestFunction, iv: Interval) -> 'DerivMagnitudes':
        return DerivMagnitudes(
            at_a=abs(float(fn.fprime(iv.a))),
            at_b=abs(float(fn.fprime(iv.b))),
            at_x=abs(float(fn.fprime(iv.x)))
        )

    @staticmethod
    def uniform(m: float) -> 'DerivMagnitudes':
        return DerivMagnitudes(at_a=m, at_b=m, at_x=m)


@dataclass(frozen=True)
class BoundReport:
    abs_sf: float
    b22: float
    b23: float
    b24: float
    b25: Optional[float]
    b26: Optional[float]
    tightest: str
    violations: Tuple[str, ...]

    @property
    def bounds(self) -> Dict[str, float]:
        return {
            bound_id: getattr(self, bound_id)
            for bound_id in BoundIds.ALL
            if getattr(self, bound_id) is not None
        }

    @property
    def has_violations(self) -> bool:
        return bool(self.violations)


class HermiteHadamardTriple(NamedTuple):
    left: float
    middle: float
    right: float

    def is_ordered(self, slack: float = 0.0) -> bool:
        return self.left <= self.middle + slack and self.middle <= self.right + slack


def _reciprocal_composition(fn: TestFunction) -> Callable[[float], float]:
    f = fn.f
    return lambda u: f(1.0 / u)


def s_f(
        fn: TestFunction, iv: Interval, alpha: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    """
    S_f = [((x-a)/(ax))^alpha + ((b-x)/(bx))^alpha] f(x)
          - Gamma(alpha+1) [J_{1/x-}^alpha (f o g)(1/b) + J_{1/x+}^alpha (f o g)(1/a)]
    with g(u) = 1/u.
    """
    order = FractionalOrder(alpha)
    a, b, x = iv.a, iv.b, iv.x
    h = _reciprocal_composition(fn)
    weight = ((x - a) / (a * x)) ** alpha + ((b - x) / (b * x)) ** alpha
    fractional_sum = 0.0
    if iv.has_right_side:
        fractional_sum += rl_right(h, 1 / x, order, 1 / b, options=options)
    if iv.has_left_side:
        fractional_sum += rl_left(h, 1 / x, order, 1 / a, options=options)
    return weight * float(fn.f(x)) - gamma_fn(alpha + 1) * fractional_sum


def _kernel_integral(
        fn: TestFunction, theta: float, x: float, alpha: float,
        options: QuadratureOptions) -> float:
    # int_0^1 t^alpha / (t theta + (1-t) x)^2 f'(theta x / (t theta + (1-t) x)) dt
    fprime = fn.fprime

    def _integrand(t: float) -> float:
        denominator = t * theta + (1 - t) * x
        return float(fprime(theta * x / denominator)) / denominator ** 2

    return integrate_value(
        _integrand, 0.0, 1.0, options=options, algebraic_weight=(alpha, 0.0)
    )


def s_f_rhs(
        fn: TestFunction, iv: Interval, alpha: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    """The integral side of the S_f identity, by direct quadrature on [0, 1]."""
    FractionalOrder(alpha)
    result = 0.0
    if iv.has_left_side:
        result += iv.left_factor(alpha) * _kernel_integral(fn, iv.a, iv.x, alpha, options)
    if iv.has_right_side:
        result -= iv.right_factor(alpha) * _kernel_integral(fn, iv.b, iv.x, alpha, options)
    return result


def scaled_residual(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def identity_residual(
        fn: TestFunction, iv: Interval, alpha: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> float:
    lhs = s_f(fn, iv, alpha, options=options)
    rhs = s_f_rhs(fn, iv, alpha, options=options)
    return scaled_residual(lhs, rhs)


class _SideCoefficients(NamedTuple):
    at_x: float
    at_end: float


def _left_coefficients(iv: Interval, s: float, vartheta: float, rho: float):
    return _SideCoefficients(
        at_x=lambda1(iv.a, iv.x, s, vartheta, rho),
        at_end=lambda2(iv.a, iv.x, s, vartheta, rho)
    )


def _right_coefficients(iv: Interval, s: float, vartheta: float, rho: float):
    return _SideCoefficients(
        at_x=lambda3(iv.b, iv.x, s, vartheta, rho),
        at_end=lambda4(iv.b, iv.x, s, vartheta, rho)
    )


def _power_mean_bound(
        d: DerivMagnitudes, iv: Interval, pr: Params,
        vartheta: float, rho: float,
        left_weight: Callable[[], float] = lambda: 1.0,
        right_weight: Callable[[], float] = lambda: 1.0) -> float:
    q = pr.q
    total = 0.0
    if iv.has_left_side:
        coefficients = _left_coefficients(iv, pr.s, vartheta, rho)
        total += left_weight() * iv.left_factor(pr.alpha) * (
            coefficients.at_x * d.at_x ** q + coefficients.at_end * d.at_a ** q
        ) ** (1 / q)
    if iv.has_right_side:
        coefficients = _right_coefficients(iv, pr.s, vartheta, rho)
        total += right_weight() * iv.right_factor(pr.alpha) * (
            coefficients.at_x * d.at_x ** q + coefficients.at_end * d.at_b ** q
        ) ** (1 / q)
    return total


def _require_conjugate(pr: Params):
    if not pr.has_conjugate:
        raise DomainError('Hoelder-type bounds require q > 1, got q=%r' % pr.q)


def bound_thm22(d: DerivMagnitudes, iv: Interval, pr: Params) -> float:
    return _power_mean_bound(d, iv, pr, vartheta=pr.q, rho=pr.alpha * pr.q)


def bound_thm23(d: DerivMagnitudes, iv: Interval, pr: Params) -> float:
    prefactor = (1 / (pr.alpha + 1)) ** (1 - 1 / pr.q)
    return prefactor * _power_mean_bound(d, iv, pr, vartheta=pr.q, rho=pr.alpha)


def bound_thm24(d: DerivMagnitudes, iv: Interval, pr: Params) -> float:
    exponent = 1 - 1 / pr.q
    prefactor = (1 / (pr.alpha + 1)) ** exponent
    return prefactor * _power_mean_bound(
        d, iv, pr, vartheta=1, rho=pr.alpha,
        left_weight=lambda: lambda5(iv.a, iv.x, pr.alpha) ** exponent,
        right_weight=lambda: lambda6(iv.b, iv.x, pr.alpha) ** exponent
    )


def bound_thm25(d: DerivMagnitudes, iv: Interval, pr: Params) -> float:
    _require_conjugate(pr)
    prefactor = (1 / (pr.alpha * pr.p + 1)) ** (1 / pr.p)
    return prefactor * _power_mean_bound(d, iv, pr, vartheta=pr.q, rho=0)


def bound_thm26(d: DerivMagnitudes, iv: Interval, pr: Params) -> float:
    _require_conjugate(pr)
    p, q = pr.p, pr.q
    total = 0.0
    if iv.has_left_side:
        total += (
            iv.left_factor(pr.alpha)
            * lambda1(iv.a, iv.x, 0, p, pr.alpha * p) ** (1 / p)
            * ((d.at_x ** q + d.at_a ** q) / (pr.s + 1)) ** (1 / q)
        )
    if iv.has_right_side:
        total += (
            iv.right_factor(pr.alpha)
            * lambda3(iv.b, iv.x, 0, p, pr.alpha * p) ** (1 / p)
            * ((d.at_x ** q + d.at_b ** q) / (pr.s + 1)) ** (1 / q)
        )
    return total


BOUND_FUNCTIONS = {
    BoundIds.B22: bound_thm22,
    BoundIds.B23: bound_thm23,
    BoundIds.B24: bound_thm24,
    BoundIds.B25: bound_thm25,
    BoundIds.B26: bound_thm26
}


def get_bound_function(theorem_id: str):
    try:
        return BOUND_FUNCTIONS[theorem_id]
    except KeyError as e:
        raise UnknownTheoremError(theorem_id) from e


def applicable_bound_ids(pr: Params) -> Tuple[str, ...]:
    return tuple(
        bound_id for bound_id in BoundIds.ALL
        if pr.has_conjugate or bound_id not in BoundIds.HOELDER
    )


def _factored_sides(iv: Interval, pr: Params, left, right) -> float:
    total = 0.0
    if iv.has_left_side:
        total += iv.left_factor(pr.alpha) * left()
    if iv.has_right_side:
        total += iv.right_factor(pr.alpha) * right()
    return total


def _coefficient_sum_root(coefficients: Callable[[], _SideCoefficients], q: float):
    return lambda: sum(coefficients()) ** (1 / q)


def corollary_bound(theorem_id: str, m: float, iv: Interval, pr: Params) -> float:
    """
    The bound of `theorem_id` under |f'| <= M on [a, b], in its M-factored form.
    """
    bound_function = get_bound_function(theorem_id)
    if not (math.isfinite(m) and m >= 0):
        raise DomainError('M must be finite and nonnegative, got %r' % m)
    if bound_function in (bound_thm25, bound_thm26):
        _require_conjugate(pr)
    alpha, s, q, p = pr.alpha, pr.s, pr.q, pr.p
    if theorem_id == BoundIds.B22:
        return m * _factored_sides(
            iv, pr,
            _coefficient_sum_root(lambda: _left_coefficients(iv, s, q, alpha * q), q),
            _coefficient_sum_root(lambda: _right_coefficients(iv, s, q, alpha * q), q)
        )
    if theorem_id == BoundIds.B23:
        return m * (1 / (alpha + 1)) ** (1 - 1 / q) * _factored_sides(
            iv, pr,
            _coefficient_sum_root(lambda: _left_coefficients(iv, s, q, alpha), q),
            _coefficient_sum_root(lambda: _right_coefficients(iv, s, q, alpha), q)
        )
    if theorem_id == BoundIds.B24:
        exponent = 1 - 1 / q
        left_sum = _coefficient_sum_root(lambda: _left_coefficients(iv, s, 1, alpha), q)
        right_sum = _coefficient_sum_root(lambda: _right_coefficients(iv, s, 1, alpha), q)
        return m * (1 / (alpha + 1)) ** exponent * _factored_sides(
            iv, pr,
            lambda: lambda5(iv.a, iv.x, alpha) ** exponent * left_sum(),
            lambda: lambda6(iv.b, iv.x, alpha) ** exponent * right_sum()
        )
    if theorem_id == BoundIds.B25:
        return m * (1 / (alpha * p + 1)) ** (1 / p) * _factored_sides(
            iv, pr,
            _coefficient_sum_root(lambda: _left_coefficients(iv, s, q, 0), q),
            _coefficient_sum_root(lambda: _right_coefficients(iv, s, q, 0), q)
        )
    return m * (2 / (s + 1)) ** (1 / q) * _factored_sides(
        iv, pr,
        lambda: lambda1(iv.a, iv.x, 0, p, alpha * p) ** (1 / p),
        lambda: lambda3(iv.b, iv.x, 0, p, alpha * p) ** (1 / p)
    )


def evaluate_all_bounds(
        fn: TestFunction, iv: Interval, pr: Params,
        slack: float = DEFAULT_VIOLATION_SLACK,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> BoundReport:
    abs_sf = abs(s_f(fn, iv, pr.alpha, options=options))
    d = DerivMagnitudes.from_function(fn, iv)
    bounds = {
        bound_id: BOUND_FUNCTIONS[bound_id](d, iv, pr)
        for bound_id in applicable_bound_ids(pr)
    }
    # min keeps the first (lowest theorem number) of equal bounds
    tightest = min(bounds, key=bounds.get)
    violations = tuple(
        bound_id for bound_id, bound in bounds.items()
        if abs_sf > bound + slack * max(1.0, bound)
    )
    if violations:
        LOGGER.warning(
            'bound violation for %s at %s, %s: |S_f|=%r, violated: %s',
            fn, iv, pr, abs_sf, violations
        )
    return BoundReport(
        abs_sf=abs_sf,
        b22=bounds[BoundIds.B22],
        b23=bounds[BoundIds.B23],
        b24=bounds[BoundIds.B24],
        b25=bounds.get(BoundIds.B25),
        b26=bounds.get(BoundIds.B26),
        tightest=tightest,
        violations=violations
    )


def hh_fractional_check(
        fn: TestFunction, a: float, b: float, alpha: float,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> HermiteHadamardTriple:
    """
    f(2ab/(a+b)) <= Gamma(alpha+1)/2 (ab/(b-a))^alpha
                    [J_{1/a-}^alpha (f o g)(1/b) + J_{1/b+}^alpha (f o g)(1/a)]
                 <= (f(a) + f(b)) / 2
    for harmonically convex f.
    """
    if not 0 < a < b:
        raise DomainError('requires 0 < a < b, got [%r, %r]' % (a, b))
    order = FractionalOrder(alpha)
    h = _reciprocal_composition(fn)
    fractional_sum = (
        rl_right(h, 1 / a, order, 1 / b, options=options)
        + rl_left(h, 1 / b, order, 1 / a, options=options)
    )
    middle = gamma_fn(alpha + 1) / 2 * (a * b / (b - a)) ** alpha * fractional_sum
    return HermiteHadamardTriple(
        left=float(fn.f(2 * a * b / (a + b))),
        middle=middle,
        right=float(fn.f(a) + fn.f(b)) / 2
    )
