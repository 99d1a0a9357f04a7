import argparse
import logging
from abc import ABC, abstractmethod
from configparser import ConfigParser
from importlib import import_module
from typing import Dict, List

from fracostrowski.config.run_config import OutputFormats, RunConfig, load_run_config
from fracostrowski.numerics.quadrature import QuadratureOptions


LOGGER = logging.getLogger(__name__)


class ExitCodes:
    SUCCESS = 0
    FAILED = 1
    DOMAIN_ERROR = 2
    QUADRATURE_ERROR = 3
    CERTIFICATE_ERROR = 4
    USAGE_ERROR = 64
    IO_ERROR = 74


class Command(ABC):
    help = None

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser, config: ConfigParser):
        pass

    @abstractmethod
    def run(self, args: argparse.Namespace, config: ConfigParser) -> int:
        pass

    def __str__(self):
        return type(self).__name__


def get_command_for_module_name(module_name: str) -> Command:
    return import_module(module_name).COMMAND


def get_commands_for_configuration(config: ConfigParser) -> Dict[str, Command]:
    return {
        name: get_command_for_module_name(module_name.strip())
        for name, module_name in config['commands'].items()
    }


def get_command_names(config: ConfigParser) -> List[str]:
    return list(config['commands'].keys())


def add_function_argument(parser: argparse.ArgumentParser, required: bool = False):
    parser.add_argument(
        '--function', required=required,
        help='name of the test function (see the catalog)'
    )


def add_quadrature_arguments(parser: argparse.ArgumentParser):
    quadrature_group = parser.add_argument_group('quadrature')
    quadrature_group.add_argument(
        '--rel-tol', type=float,
        help='relative quadrature tolerance (default: [quadrature] rel_tol)'
    )
    quadrature_group.add_argument(
        '--abs-tol', type=float,
        help='absolute quadrature tolerance (default: [quadrature] abs_tol)'
    )


def add_output_arguments(parser: argparse.ArgumentParser):
    output_group = parser.add_argument_group('output')
    output_group.add_argument(
        '--out',
        help='output file (default: stdout)'
    )
    output_group.add_argument(
        '--format', choices=OutputFormats.ALL,
        help='output format (default: [sweep] format)'
    )


def add_config_argument(parser: argparse.ArgumentParser):
    parser.add_argument(
        '--config',
        help='path to a JSON run configuration'
    )


def get_run_config_overrides(args: argparse.Namespace) -> dict:
    return {
        'function_name': getattr(args, 'function', None),
        'tolerances': {
            'rel': getattr(args, 'rel_tol', None),
            'abs': getattr(args, 'abs_tol', None)
        },
        'output': {
            'path': getattr(args, 'out', None),
            'format': getattr(args, 'format', None)
        },
        'seed': getattr(args, 'seed', None)
    }


def get_run_config_for_args(
        args: argparse.Namespace, config: ConfigParser, overrides: dict = None) -> RunConfig:
    return load_run_config(
        config,
        path=getattr(args, 'config', None),
        overrides={**get_run_config_overrides(args), **(overrides or {})}
    )


def get_quadrature_options_for_args(
        args: argparse.Namespace, config: ConfigParser) -> QuadratureOptions:
    quadrature = config['quadrature']
    return QuadratureOptions(
        rel_tol=args.rel_tol if args.rel_tol is not None else quadrature.getfloat('rel_tol'),
        abs_tol=args.abs_tol if args.abs_tol is not None else quadrature.getfloat('abs_tol'),
        max_subdivisions=quadrature.getint('max_subdivisions')
    )


def add_random_points_arguments(parser: argparse.ArgumentParser):
    random_group = parser.add_argument_group('random points')
    random_group.add_argument(
        '--random-points', type=int,
        help='replace the grid by this many seeded random points'
    )
    random_group.add_argument('--seed', type=int, help='seed of the random points')


def get_random_points_overrides(args: argparse.Namespace) -> dict:
    return {'random_points': args.random_points}
