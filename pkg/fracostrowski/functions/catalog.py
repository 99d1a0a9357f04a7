import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np

from fracostrowski.errors import UnknownFunctionError


LOGGER = logging.getLogger(__name__)


T_RealFunction = Callable[[float], float]
T_CertificationTarget = Callable[[np.ndarray, float], np.ndarray]

CERTIFY_NUMERICALLY = 'certify numerically'

DERIVATIVE_CHECK_REL_TOL = 1e-6
DERIVATIVE_CHECK_STEP = 1e-5


class FunctionNames:
    IDENTITY = 'identity'
    NEG_LOG = 'neg_log'
    QUADRATIC = 'quadratic'
    RECIPROCAL = 'reciprocal'
    EXPONENTIAL = 'exponential'


class FixtureNames:
    NEG_IDENTITY = 'neg_identity'
    CORRUPTED_DERIVATIVE = 'corrupted_derivative'
    CONSTANT = 'constant'


@dataclass(frozen=True)
class TestFunction:
    """
    A differentiable function on (0, inf) with its derivative.

    Both callables accept floats and numpy arrays. `certification_target`
    replaces |f'|^q as the function whose harmonic s-convexity is certified
    (only used by test fixtures).
    """
    __test__ = False

    name: str
    f: T_RealFunction
    fprime: T_RealFunction
    analytic_certificate: Optional[str] = None
    certification_target: Optional[T_CertificationTarget] = None

    def derivative_power(self, q: float) -> Callable[[np.ndarray], np.ndarray]:
        if self.certification_target is not None:
            target = self.certification_target
            return lambda u: target(u, q)
        fprime = self.fprime
        return lambda u: np.abs(fprime(u)) ** q

    def derivative_mismatch(self, x: float) -> float:
        """
        Central-difference defect of fprime at x, relative to max(1, |fprime(x)|).
        """
        h = DERIVATIVE_CHECK_STEP * x
        estimate = (self.f(x + h) - self.f(x - h)) / (2 * h)
        exact = self.fprime(x)
        return float(abs(estimate - exact) / max(1.0, abs(exact)))

    def has_consistent_derivative(self, points: Iterable[float]) -> bool:
        return all(
            self.derivative_mismatch(x) <= DERIVATIVE_CHECK_REL_TOL
            for x in points
        )

    def __str__(self):
        return self.name


def _ones(u):
    return np.ones_like(u, dtype=float)[()]


def _zeros(u):
    return np.zeros_like(u, dtype=float)[()]


def _negative_identity(u, _q):
    return -np.asarray(u, dtype=float)


def catalog() -> List[TestFunction]:
    return [
        TestFunction(
            name=FunctionNames.IDENTITY,
            f=lambda u: u,
            fprime=_ones,
            analytic_certificate=(
                '|f\'|^q = 1, harmonically s-convex for every s in (0, 1]'
                ' since t^s + (1 - t)^s >= 1'
            )
        ),
        TestFunction(
            name=FunctionNames.NEG_LOG,
            f=lambda u: -np.log(u),
            fprime=lambda u: -1.0 / u,
            analytic_certificate=(
                '|f\'|^q = u^-q; v -> v^q is convex for q >= 1, hence harmonically'
                ' convex and, being nonnegative, harmonically s-convex'
            )
        ),
        TestFunction(
            name=FunctionNames.QUADRATIC,
            f=lambda u: u ** 2 / 2,
            fprime=lambda u: u,
            analytic_certificate=(
                '|f\'|^q = u^q; v -> v^-q is convex on v > 0'
            )
        ),
        TestFunction(
            name=FunctionNames.RECIPROCAL,
            f=lambda u: 1.0 / u,
            fprime=lambda u: -1.0 / u ** 2,
            analytic_certificate=(
                '|f\'|^q = u^-2q; v -> v^2q is convex for q >= 1/2'
            )
        ),
        TestFunction(
            name=FunctionNames.EXPONENTIAL,
            f=np.exp,
            fprime=np.exp,
            analytic_certificate=CERTIFY_NUMERICALLY
        )
    ]


def fixtures() -> List[TestFunction]:
    return [
        TestFunction(
            name=FixtureNames.NEG_IDENTITY,
            f=lambda u: -u ** 2 / 2,
            fprime=lambda u: -u,
            certification_target=_negative_identity
        ),
        TestFunction(
            name=FixtureNames.CONSTANT,
            f=_ones,
            fprime=_zeros
        ),
        TestFunction(
            name=FixtureNames.CORRUPTED_DERIVATIVE,
            f=lambda u: u ** 2,
            # deliberately wrong (2u is correct)
            fprime=lambda u: u
        )
    ]


def _functions_by_name(include_fixtures: bool = True) -> Dict[str, TestFunction]:
    functions = catalog()
    if include_fixtures:
        functions += fixtures()
    return {fn.name: fn for fn in functions}


def get_test_function(name: str, include_fixtures: bool = True) -> TestFunction:
    functions_by_name = _functions_by_name(include_fixtures=include_fixtures)
    try:
        return functions_by_name[name]
    except KeyError as e:
        raise UnknownFunctionError(name, available=functions_by_name.keys()) from e


def get_function_names(include_fixtures: bool = False) -> List[str]:
    return list(_functions_by_name(include_fixtures=include_fixtures).keys())
