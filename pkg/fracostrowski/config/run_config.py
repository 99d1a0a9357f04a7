"""
Run configuration of the verification commands: a single JSON document,
defaults from app-defaults.cfg and command-line overrides.
"""
import json
import logging
import math
from configparser import ConfigParser
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, NamedTuple, Optional, Tuple

from fracostrowski.errors import ConfigError
from fracostrowski.functions.catalog import get_test_function
from fracostrowski.numerics.quadrature import QuadratureOptions
from fracostrowski.utils.config import parse_float_list, parse_interval_list


LOGGER = logging.getLogger(__name__)


class OutputFormats:
    CSV = 'csv'
    JSON = 'json'

    ALL = (CSV, JSON)


class GridPoint(NamedTuple):
    alpha: float
    s: float
    q: float
    a: float
    b: float
    x: float


def interior_points(a: float, b: float, count: int) -> List[float]:
    step = (b - a) / (count + 1)
    return [a + i * step for i in range(1, count + 1)]


def _require(condition: bool, message: str, *args):
    if not condition:
        raise ConfigError(message % args)


def _all_finite(values) -> bool:
    return all(math.isfinite(value) for value in values)


@dataclass(frozen=True)
class SweepGrid:
    alphas: Tuple[float, ...]
    ss: Tuple[float, ...]
    qs: Tuple[float, ...]
    intervals: Tuple[Tuple[float, float], ...]
    x_count: int

    def __post_init__(self):
        for name in ('alphas', 'ss', 'qs', 'intervals'):
            _require(len(getattr(self, name)) > 0, '%s must not be empty', name)
        _require(_all_finite(self.alphas), 'alphas must be finite')
        _require(all(alpha > 0 for alpha in self.alphas), 'alphas must be positive')
        _require(all(0 < s <= 1 for s in self.ss), 'ss must be in (0, 1]')
        _require(_all_finite(self.qs), 'qs must be finite')
        _require(all(q >= 1 for q in self.qs), 'qs must be >= 1')
        for a, b in self.intervals:
            _require(
                math.isfinite(b) and 0 < a < b,
                'intervals must satisfy 0 < a < b, got (%r, %r)', a, b
            )
        _require(self.x_count >= 1, 'x_count must be at least 1, got %r', self.x_count)

    def points(self) -> Iterator[GridPoint]:
        # lexicographic over (alpha, s, q, a, b, x)
        for alpha, s, q, (a, b) in product(
                sorted(self.alphas), sorted(self.ss), sorted(self.qs),
                sorted(self.intervals)):
            for x in interior_points(a, b, self.x_count):
                yield GridPoint(alpha=alpha, s=s, q=q, a=a, b=b, x=x)

    def __len__(self):
        return (
            len(self.alphas) * len(self.ss) * len(self.qs)
            * len(self.intervals) * self.x_count
        )


@dataclass(frozen=True)
class Tolerances:
    rel: float
    abs: float

    def __post_init__(self):
        _require(self.rel > 0 and self.abs > 0, 'tolerances must be positive')


@dataclass(frozen=True)
class OutputSpec:
    path: Optional[str]
    format: str

    def __post_init__(self):
        _require(
            self.format in OutputFormats.ALL,
            'format must be one of %s, got %r', OutputFormats.ALL, self.format
        )


@dataclass(frozen=True)
class RunConfig:
    function_name: str
    grid: SweepGrid
    tolerances: Tolerances
    output: OutputSpec
    seed: int
    max_subdivisions: int
    num_workers: int = 1
    random_points: int = 0

    def __post_init__(self):
        # raises UnknownFunctionError
        get_test_function(self.function_name)
        _require(self.num_workers >= 1, 'num_workers must be at least 1')
        _require(self.random_points >= 0, 'random_points must not be negative')

    @property
    def quadrature_options(self) -> QuadratureOptions:
        return QuadratureOptions(
            rel_tol=self.tolerances.rel,
            abs_tol=self.tolerances.abs,
            max_subdivisions=self.max_subdivisions
        )


def _get_default_document(config: ConfigParser) -> dict:
    sweep = config['sweep']
    quadrature = config['quadrature']
    return {
        'function_name': sweep.get('function'),
        'grid': {
            'alphas': parse_float_list(sweep.get('alphas')),
            'ss': parse_float_list(sweep.get('ss')),
            'qs': parse_float_list(sweep.get('qs')),
            'intervals': parse_interval_list(sweep.get('intervals')),
            'x_count': sweep.getint('x_count')
        },
        'tolerances': {
            'rel': quadrature.getfloat('rel_tol'),
            'abs': quadrature.getfloat('abs_tol')
        },
        'output': {
            'path': None,
            'format': sweep.get('format')
        },
        'seed': sweep.getint('seed'),
        'num_workers': sweep.getint('num_workers'),
        'random_points': 0
    }


def read_config_document(path: str) -> dict:
    try:
        with open(path, 'r') as f:
            document = json.load(f)
    except OSError as e:
        raise ConfigError('failed to read config %r: %s' % (path, e)) from e
    except ValueError as e:
        raise ConfigError('invalid JSON in config %r: %s' % (path, e)) from e
    if not isinstance(document, dict):
        raise ConfigError('config %r must be a JSON object' % path)
    LOGGER.debug('config document: %s', document)
    return document


def _merge(defaults: dict, document: dict) -> dict:
    merged = dict(defaults)
    for key, value in document.items():
        if key not in defaults:
            raise ConfigError('unknown config key: %r' % key)
        if isinstance(defaults[key], dict):
            if not isinstance(value, dict):
                raise ConfigError('config key %r must be an object' % key)
            merged[key] = _merge(defaults[key], value)
        else:
            merged[key] = value
    return merged


def _to_run_config(document: dict, max_subdivisions: int) -> RunConfig:
    try:
        grid = document['grid']
        return RunConfig(
            function_name=str(document['function_name']),
            grid=SweepGrid(
                alphas=tuple(float(alpha) for alpha in grid['alphas']),
                ss=tuple(float(s) for s in grid['ss']),
                qs=tuple(float(q) for q in grid['qs']),
                intervals=tuple(
                    (float(a), float(b)) for a, b in grid['intervals']
                ),
                x_count=int(grid['x_count'])
            ),
            tolerances=Tolerances(
                rel=float(document['tolerances']['rel']),
                abs=float(document['tolerances']['abs'])
            ),
            output=OutputSpec(
                path=document['output']['path'],
                format=str(document['output']['format'])
            ),
            seed=int(document['seed']),
            max_subdivisions=max_subdivisions,
            num_workers=int(document['num_workers']),
            random_points=int(document['random_points'])
        )
    except (TypeError, ValueError) as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError('invalid config value: %s' % e) from e


def load_run_config(
        config: ConfigParser,
        path: Optional[str] = None,
        overrides: Optional[dict] = None) -> RunConfig:
    """
    Defaults from the app config, then the JSON document at `path`, then
    `overrides` (same nesting as the JSON document, None values ignored).
    """
    document = _get_default_document(config)
    if path:
        document = _merge(document, read_config_document(path))
    if overrides:
        document = _merge(document, _without_none(overrides))
    LOGGER.debug('run config document: %s', document)
    return _to_run_config(
        document,
        max_subdivisions=config['quadrature'].getint('max_subdivisions')
    )


def _without_none(d: dict) -> dict:
    result = {}
    for key, value in d.items():
        if isinstance(value, dict):
            value = _without_none(value)
            if not value:
                continue
        elif value is None:
            continue
        result[key] = value
    return result
