import json
from pathlib import Path

import pytest

from fracostrowski.config.app_config import read_app_config
from fracostrowski.config.run_config import GridPoint, OutputFormats, load_run_config
from fracostrowski.functions.catalog import get_test_function
from fracostrowski.inequalities.ostrowski import BoundIds
from fracostrowski.runners.sweep_runner import (
    SweepColumns,
    count_violations,
    evaluate_point,
    random_grid_points,
    read_seed_comment,
    read_sweep_csv,
    report_to_row,
    run_sweep,
    write_rows,
    write_sweep_rows
)


POINT = GridPoint(alpha=1.0, s=1.0, q=2.0, a=1.0, b=2.0, x=1.5)


def _run_config(grid: dict = None, **overrides):
    return load_run_config(read_app_config(), overrides={
        'function_name': 'identity',
        'grid': {
            'alphas': [1.0], 'ss': [1.0], 'qs': [2.0],
            'intervals': [[1.0, 2.0]], 'x_count': 1,
            **(grid or {})
        },
        **overrides
    })


class TestRandomGridPoints:
    def test_should_be_deterministic_for_seed(self):
        assert random_grid_points(20, seed=7) == random_grid_points(20, seed=7)

    def test_should_differ_between_seeds(self):
        assert random_grid_points(5, seed=1) != random_grid_points(5, seed=2)

    def test_should_generate_valid_points(self):
        for point in random_grid_points(200, seed=0):
            assert 0 < point.alpha
            assert 0 < point.s <= 1
            assert point.q >= 1
            assert 0 < point.a < point.x < point.b


class TestEvaluatePoint:
    def test_should_report_all_bounds_for_q_greater_than_one(self):
        report = evaluate_point(POINT, get_test_function('identity'))
        assert set(report.bounds) == set(BoundIds.ALL)
        assert not report.has_violations

    def test_should_leave_hoelder_bounds_empty_for_q_one(self):
        report = evaluate_point(POINT._replace(q=1.0), get_test_function('identity'))
        assert report.b25 is None
        assert report.b26 is None
        row = report_to_row(POINT._replace(q=1.0), report)
        assert row[BoundIds.B25] is None


class TestRunSweep:
    def test_should_evaluate_singleton_grid(self):
        rows = run_sweep(_run_config())
        assert len(rows) == 1
        assert {column: rows[0][column] for column in SweepColumns.INPUTS} == POINT._asdict()
        assert count_violations(rows) == 0

    def test_should_evaluate_grid_in_lexicographic_order(self):
        rows = run_sweep(_run_config(grid={'alphas': [2.0, 0.5], 'qs': [1.0, 2.0]}))
        keys = [tuple(row[column] for column in SweepColumns.INPUTS) for row in rows]
        assert len(rows) == 4
        assert keys == sorted(keys)

    def test_should_give_same_rows_with_multiple_workers(self):
        grid = {'alphas': [0.5, 1.0, 2.0], 'x_count': 2}
        assert (
            run_sweep(_run_config(grid=grid, num_workers=3))
            == run_sweep(_run_config(grid=grid))
        )

    def test_should_use_seeded_random_points(self):
        rows = run_sweep(_run_config(random_points=3, seed=11))
        assert [
            tuple(row[column] for column in SweepColumns.INPUTS) for row in rows
        ] == [tuple(point) for point in random_grid_points(3, seed=11)]


class TestWriteRows:
    def test_should_write_and_read_back_csv(self, temp_dir: Path):
        rows = run_sweep(_run_config(grid={'qs': [1.0, 2.0]}))
        path = str(temp_dir.joinpath('sweep.csv'))
        write_rows(rows, SweepColumns.ALL, path, OutputFormats.CSV)
        assert read_sweep_csv(path) == rows
        assert read_seed_comment(path) is None

    def test_should_write_seed_comment_for_random_points(self, temp_dir: Path):
        path = str(temp_dir.joinpath('sweep.csv'))
        run_config = _run_config(
            random_points=2, seed=5, output={'path': path, 'format': 'csv'}
        )
        write_sweep_rows(run_sweep(run_config), run_config)
        assert read_seed_comment(path) == 5
        assert len(read_sweep_csv(path)) == 2

    def test_should_write_header_first_without_seed(self, temp_dir: Path):
        path = temp_dir.joinpath('sweep.csv')
        write_rows([], SweepColumns.ALL, str(path), OutputFormats.CSV)
        assert path.read_text() == ','.join(SweepColumns.ALL) + '\n'

    def test_should_write_json_document(self, temp_dir: Path):
        rows = run_sweep(_run_config())
        path = temp_dir.joinpath('sweep.json')
        write_rows(rows, SweepColumns.ALL, str(path), OutputFormats.JSON, seed=3)
        document = json.loads(path.read_text())
        assert document['columns'] == list(SweepColumns.ALL)
        assert document['seed'] == 3
        assert document['rows'][0][SweepColumns.VIOLATION] == 0
        assert document['rows'][0][SweepColumns.ABS_SF] == pytest.approx(
            rows[0][SweepColumns.ABS_SF]
        )
