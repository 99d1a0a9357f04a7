import argparse
import logging
from configparser import ConfigParser

from fracostrowski.runners.sweep_runner import (
    count_violations,
    run_sweep,
    write_sweep_rows
)
from fracostrowski.utils.config import parse_float_list, parse_interval_list

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


def get_grid_overrides(args: argparse.Namespace) -> dict:
    return {
        'grid': {
            'alphas': parse_float_list(args.alphas) if args.alphas else None,
            'ss': parse_float_list(args.ss) if args.ss else None,
            'qs': parse_float_list(args.qs) if args.qs else None,
            'intervals': parse_interval_list(args.intervals) if args.intervals else None,
            'x_count': args.x_count
        },
        'num_workers': args.num_workers,
        **get_random_points_overrides(args)
    }


class SweepCommand(Command):
    help = 'evaluate |S_f| and all bounds over a grid or random points'

    def add_arguments(self, parser: argparse.ArgumentParser, config: ConfigParser):
        add_config_argument(parser)
        add_function_argument(parser)
        grid_group = parser.add_argument_group('grid')
        grid_group.add_argument('--alphas', help='comma separated fractional orders')
        grid_group.add_argument('--ss', help='comma separated convexity orders')
        grid_group.add_argument('--qs', help='comma separated exponents')
        grid_group.add_argument('--intervals', help='comma separated a:b intervals')
        grid_group.add_argument(
            '--x-count', type=int, help='interior x points per interval'
        )
        add_random_points_arguments(parser)
        parser.add_argument(
            '--num-workers', '--num_workers', type=int,
            help='The number of workers.'
        )
        add_quadrature_arguments(parser)
        add_output_arguments(parser)

    def run(self, args: argparse.Namespace, config: ConfigParser) -> int:
        run_config = get_run_config_for_args(args, config, get_grid_overrides(args))
        rows = run_sweep(run_config, slack=config['bounds'].getfloat('violation_slack'))
        write_sweep_rows(rows, run_config)
        violation_count = count_violations(rows)
        if violation_count:
            LOGGER.warning('%d of %d rows violate a bound', violation_count, len(rows))
            return ExitCodes.FAILED
        return ExitCodes.SUCCESS


COMMAND = SweepCommand()
