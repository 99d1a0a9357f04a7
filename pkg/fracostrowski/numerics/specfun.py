"""
Real-valued special functions: Gamma, Beta and the Gauss hypergeometric
function 2F1 on 0 <= z < 1.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from scipy import special

from fracostrowski.errors import (
    DomainError,
    NonConvergenceError,
    SpecialFunctionOverflowError
)


LOGGER = logging.getLogger(__name__)


DEFAULT_MAX_TERMS = 10 ** 6

# relative size of the series tail at which summation stops
SERIES_TOLERANCE = 2.0 ** -53

EULER_THRESHOLD = 0.5


def _check_finite(**kwargs):
    for name, value in kwargs.items():
        if not math.isfinite(value):
            raise DomainError('%s must be finite, got %r' % (name, value))


@dataclass(frozen=True)
class HypArgs:
    a: float
    b: float
    c: float
    z: float

    def __post_init__(self):
        _check_finite(a=self.a, b=self.b, c=self.c, z=self.z)
        if self.c <= 0:
            raise DomainError('c must be positive, got %r' % self.c)
        if not 0.0 <= self.z < 1.0:
            raise DomainError('z must be in [0, 1), got %r' % self.z)

    def euler_transformed(self) -> 'HypArgs':
        return HypArgs(a=self.c - self.a, b=self.c - self.b, c=self.c, z=self.z)

    def prefers_euler_transformation(self) -> bool:
        # the transformed series decays faster and keeps all terms of one sign
        return (
            self.z > EULER_THRESHOLD
            and self.a + self.b - self.c > 0
            and self.c - self.a >= 0
            and self.c - self.b >= 0
        )


def gamma_fn(x: float) -> float:
    _check_finite(x=x)
    if x <= 0:
        raise DomainError('gamma_fn requires x > 0, got %r' % x)
    result = float(special.gamma(x))
    if not math.isfinite(result):
        raise SpecialFunctionOverflowError('gamma_fn(%r) exceeds the floating range' % x)
    return result


def beta_fn(x: float, y: float) -> float:
    _check_finite(x=x, y=y)
    if x <= 0 or y <= 0:
        raise DomainError('beta_fn requires positive arguments, got (%r, %r)' % (x, y))
    return math.exp(special.gammaln(x) + special.gammaln(y) - special.gammaln(x + y))


def _next_term_ratio(args: HypArgs, k: int) -> float:
    return (
        (args.a + k) * (args.b + k)
        / ((args.c + k) * (k + 1))
        * args.z
    )


def hyp2f1_series(
        args: HypArgs,
        max_terms: int = DEFAULT_MAX_TERMS,
        tolerance: float = SERIES_TOLERANCE) -> Tuple[float, int]:
    """
    Sums the power series of 2F1 by term recurrence.

    Returns the compensated sum and the number of terms used.
    Raises NonConvergenceError if the tail estimate does not drop below
    `tolerance` (relative) within `max_terms` terms.
    """
    if args.z == 0.0:
        return 1.0, 1
    terms: List[float] = [1.0]
    term = 1.0
    partial = 1.0
    for k in range(max_terms):
        term *= _next_term_ratio(args, k)
        if term == 0.0:
            # terminating series (a or b a non-positive integer)
            return math.fsum(terms), len(terms)
        terms.append(term)
        partial += term
        ratio = max(abs(_next_term_ratio(args, k + 1)), args.z)
        if ratio < 1.0:
            tail = abs(term) * ratio / (1.0 - ratio)
            if tail <= tolerance * abs(partial):
                return math.fsum(terms), len(terms)
    raise NonConvergenceError(
        '2F1%r did not converge within %d terms' % (
            (args.a, args.b, args.c, args.z), max_terms
        ),
        iterations=max_terms
    )


def hyp2f1(
        args: HypArgs,
        euler: Optional[bool] = None,
        max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """
    Gauss hypergeometric function 2F1(a, b; c; z) for 0 <= z < 1.

    With `euler=None` the Euler transformation
    2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z) is applied when it
    shortens the series; True or False forces either path.
    """
    if euler is None:
        euler = args.prefers_euler_transformation()
    if euler:
        value, n_terms = hyp2f1_series(args.euler_transformed(), max_terms=max_terms)
        value *= (1.0 - args.z) ** (args.c - args.a - args.b)
    else:
        value, n_terms = hyp2f1_series(args, max_terms=max_terms)
    LOGGER.debug('2F1%s = %s (terms: %d, euler: %s)', args, value, n_terms, euler)
    return value
