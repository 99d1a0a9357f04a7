import argparse
import logging
from configparser import ConfigParser
from typing import List

from fracostrowski.config.run_config import RunConfig
from fracostrowski.functions.catalog import get_test_function
from fracostrowski.inequalities.ostrowski import Interval, s_f, s_f_rhs, scaled_residual
from fracostrowski.runners.sweep_runner import get_output_seed, get_run_points, write_rows
from fracostrowski.utils.formatting import format_display_float

from . import (
    Command,
    ExitCodes,
    add_config_argument,
    add_function_argument,
    add_output_arguments,
    add_quadrature_arguments,
    add_random_points_arguments,
    get_random_points_overrides,
    get_run_config_for_args
)


LOGGER = logging.getLogger(__name__)


class IdentityColumns:
    ALPHA = 'alpha'
    A = 'a'
    B = 'b'
    X = 'x'
    S_F = 's_f'
    S_F_RHS = 's_f_rhs'
    RESIDUAL = 'residual'

    ALL = (ALPHA, A, B, X, S_F, S_F_RHS, RESIDUAL)


def evaluate_identity_rows(run_config: RunConfig) -> List[dict]:
    fn = get_test_function(run_config.function_name)
    options = run_config.quadrature_options
    # the identity does not depend on s and q
    keys = list(dict.fromkeys(
        (point.alpha, point.a, point.b, point.x)
        for point in get_run_points(run_config)
    ))
    rows = []
    for alpha, a, b, x in keys:
        iv = Interval(a=a, b=b, x=x)
        lhs = s_f(fn, iv, alpha, options=options)
        rhs = s_f_rhs(fn, iv, alpha, options=options)
        rows.append({
            IdentityColumns.ALPHA: alpha,
            IdentityColumns.A: a,
            IdentityColumns.B: b,
            IdentityColumns.X: x,
            IdentityColumns.S_F: lhs,
            IdentityColumns.S_F_RHS: rhs,
            IdentityColumns.RESIDUAL: scaled_residual(lhs, rhs)
        })
    LOGGER.info('evaluated identity for %s at %d points', fn, len(rows))
    return rows


def format_row(row: dict) -> str:
    return ', '.join(
        '%s=%s' % (column, format_display_float(row[column]))
        for column in IdentityColumns.ALL
    )


class IdentityCommand(Command):
    help = 'verify the S_f integral identity over a grid'

    def add_arguments(self, parser: argparse.ArgumentParser, config: ConfigParser):
        add_config_argument(parser)
        add_function_argument(parser)
        parser.add_argument(
            '--tolerance', type=float,
            default=config['identity'].getfloat('tolerance'),
            help='maximum admissible scaled residual'
        )
        add_random_points_arguments(parser)
        add_quadrature_arguments(parser)
        add_output_arguments(parser)

    def run(self, args: argparse.Namespace, config: ConfigParser) -> int:
        run_config = get_run_config_for_args(args, config, get_random_points_overrides(args))
        rows = evaluate_identity_rows(run_config)
        if run_config.output.path:
            write_rows(
                rows, IdentityColumns.ALL,
                path=run_config.output.path,
                output_format=run_config.output.format,
                seed=get_output_seed(run_config)
            )
        worst_row = max(rows, key=lambda row: row[IdentityColumns.RESIDUAL])
        print('max residual: %s' % format_display_float(worst_row[IdentityColumns.RESIDUAL]))
        if worst_row[IdentityColumns.RESIDUAL] <= args.tolerance:
            return ExitCodes.SUCCESS
        print('worst row: %s' % format_row(worst_row))
        return ExitCodes.FAILED


COMMAND = IdentityCommand()
