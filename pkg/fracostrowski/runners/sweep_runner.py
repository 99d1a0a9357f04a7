import concurrent.futures
import csv
import json
import logging
import sys
from contextlib import contextmanager
from functools import partial
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

from fracostrowski.config.run_config import GridPoint, OutputFormats, RunConfig
from fracostrowski.functions.catalog import TestFunction, get_test_function
from fracostrowski.inequalities.ostrowski import (
    DEFAULT_VIOLATION_SLACK,
    BoundIds,
    BoundReport,
    Interval,
    Params,
    evaluate_all_bounds
)
from fracostrowski.numerics.quadrature import (
    DEFAULT_QUADRATURE_OPTIONS,
    QuadratureOptions
)
from fracostrowski.utils.formatting import format_csv_float, format_flag


LOGGER = logging.getLogger(__name__)


class SweepColumns:
    ALPHA = 'alpha'
    S = 's'
    Q = 'q'
    A = 'a'
    B = 'b'
    X = 'x'
    ABS_SF = 'abs_sf'
    TIGHTEST = 'tightest'
    VIOLATION = 'violation'

    INPUTS = (ALPHA, S, Q, A, B, X)
    ALL = INPUTS + (ABS_SF,) + BoundIds.ALL + (TIGHTEST, VIOLATION)


SEED_COMMENT_PREFIX = '# seed='

RANDOM_ALPHA_RANGE = (0.1, 3.0)
RANDOM_Q_RANGE = (1.25, 4.0)
RANDOM_Q_ONE_PROBABILITY = 0.25
RANDOM_A_RANGE = (0.5, 9.0)
RANDOM_B_MAX = 10.0
RANDOM_MIN_LENGTH_FRACTION = 0.05
RANDOM_X_MARGIN = 0.05


def random_grid_points(count: int, seed: int) -> List[GridPoint]:
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        alpha = rng.uniform(*RANDOM_ALPHA_RANGE)
        # 1 - U[0, 1) lies in (0, 1]
        s = 1.0 - rng.uniform(0.0, 1.0)
        q = (
            1.0 if rng.uniform() < RANDOM_Q_ONE_PROBABILITY
            else rng.uniform(*RANDOM_Q_RANGE)
        )
        a = rng.uniform(*RANDOM_A_RANGE)
        b = a + (RANDOM_B_MAX - a) * rng.uniform(RANDOM_MIN_LENGTH_FRACTION, 1.0)
        x = a + (b - a) * rng.uniform(RANDOM_X_MARGIN, 1.0 - RANDOM_X_MARGIN)
        points.append(GridPoint(
            alpha=float(alpha), s=float(s), q=float(q), a=float(a), b=float(b), x=float(x)
        ))
    return points


def get_run_points(run_config: RunConfig) -> List[GridPoint]:
    if run_config.random_points:
        return random_grid_points(run_config.random_points, seed=run_config.seed)
    return list(run_config.grid.points())


def evaluate_point(
        point: GridPoint,
        fn: TestFunction,
        slack: float = DEFAULT_VIOLATION_SLACK,
        options: QuadratureOptions = DEFAULT_QUADRATURE_OPTIONS) -> BoundReport:
    return evaluate_all_bounds(
        fn,
        Interval(a=point.a, b=point.b, x=point.x),
        Params(alpha=point.alpha, s=point.s, q=point.q),
        slack=slack,
        options=options
    )


def report_to_row(point: GridPoint, report: BoundReport) -> dict:
    return {
        **point._asdict(),
        SweepColumns.ABS_SF: report.abs_sf,
        **{bound_id: getattr(report, bound_id) for bound_id in BoundIds.ALL},
        SweepColumns.TIGHTEST: report.tightest,
        SweepColumns.VIOLATION: report.has_violations
    }


def _format_csv_value(value) -> str:
    if isinstance(value, bool):
        return format_flag(value)
    if isinstance(value, str):
        return value
    return format_csv_float(value)


def _format_json_value(value):
    if isinstance(value, bool):
        return int(value)
    return value


@contextmanager
def _open_output(path: Optional[str]):
    if not path or path == '-':
        yield sys.stdout
        return
    with open(path, 'w', newline='') as fp:
        yield fp


def write_rows(
        rows: Sequence[dict],
        columns: Sequence[str],
        path: Optional[str],
        output_format: str,
        seed: Optional[int] = None):
    """Writes rows as CSV or JSON to `path` (stdout when no path is given)."""
    with _open_output(path) as fp:
        if output_format == OutputFormats.JSON:
            document = {
                'columns': list(columns),
                'rows': [
                    {column: _format_json_value(row[column]) for column in columns}
                    for row in rows
                ]
            }
            if seed is not None:
                document['seed'] = seed
            fp.write(json.dumps(document, indent=2))
            fp.write('\n')
            return
        if seed is not None:
            fp.write('%s%d\n' % (SEED_COMMENT_PREFIX, seed))
        writer = csv.writer(fp, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_csv_value(row[column]) for column in columns])
    if path and path != '-':
        LOGGER.info('saved %d rows to: %s', len(rows), path)


def _parse_csv_value(column: str, value: str):
    if column == SweepColumns.TIGHTEST:
        return value
    if column == SweepColumns.VIOLATION:
        return value == '1'
    if value == '':
        return None
    return float(value)


def read_sweep_csv(path: str) -> List[Dict[str, object]]:
    with open(path, 'r', newline='') as fp:
        lines = [line for line in fp if not line.startswith('#')]
    return [
        {column: _parse_csv_value(column, value) for column, value in row.items()}
        for row in csv.DictReader(lines)
    ]


def read_seed_comment(path: str) -> Optional[int]:
    with open(path, 'r') as fp:
        first_line = fp.readline()
    if first_line.startswith(SEED_COMMENT_PREFIX):
        return int(first_line[len(SEED_COMMENT_PREFIX):])
    return None


def evaluate_points_with_pool_executor(
        executor: concurrent.futures.Executor,
        points: Sequence[GridPoint],
        evaluate: callable) -> List[BoundReport]:
    violation_count = 0
    reports = []

    def log_summary(name: str):
        LOGGER.info(
            '%s: %d rows, %d violations (total: %d)',
            name, len(reports), violation_count, len(points)
        )

    with logging_redirect_tqdm():
        # map yields in submission order, whatever the completion order
        for report in tqdm(executor.map(evaluate, points), total=len(points), disable=None):
            reports.append(report)
            if report.has_violations:
                violation_count += 1
                log_summary('progress')
    log_summary('done')
    return reports


def run_sweep(run_config: RunConfig, slack: float = DEFAULT_VIOLATION_SLACK) -> List[dict]:
    fn = get_test_function(run_config.function_name)
    points = get_run_points(run_config)
    LOGGER.info(
        'sweeping %s over %d points using %d workers',
        fn, len(points), run_config.num_workers
    )
    evaluate = partial(
        evaluate_point, fn=fn, slack=slack, options=run_config.quadrature_options
    )
    with concurrent.futures.ThreadPoolExecutor(max_workers=run_config.num_workers) as executor:
        reports = evaluate_points_with_pool_executor(
            executor=executor, points=points, evaluate=evaluate
        )
    return [report_to_row(point, report) for point, report in zip(points, reports)]


def count_violations(rows: Iterable[dict]) -> int:
    return sum(1 for row in rows if row[SweepColumns.VIOLATION])


def get_output_seed(run_config: RunConfig) -> Optional[int]:
    # only random points depend on the seed
    return run_config.seed if run_config.random_points else None


def write_sweep_rows(rows: Sequence[dict], run_config: RunConfig):
    write_rows(
        rows,
        columns=SweepColumns.ALL,
        path=run_config.output.path,
        output_format=run_config.output.format,
        seed=get_output_seed(run_config)
    )
