import argparse
import logging
from configparser import ConfigParser

from fracostrowski.functions.catalog import get_test_function
from fracostrowski.numerics.quadrature import FractionalOrder, rl_left, rl_right
from fracostrowski.utils.formatting import format_display_float

from . import (
    Command,
    ExitCodes,
    add_function_argument,
    add_quadrature_arguments,
    get_quadrature_options_for_args
)


LOGGER = logging.getLogger(__name__)


class Sides:
    LEFT = 'left'
    RIGHT = 'right'


FRACTIONAL_INTEGRALS = {
    Sides.LEFT: rl_left,
    Sides.RIGHT: rl_right
}


class FractionalIntegralCommand(Command):
    help = 'evaluate a Riemann-Liouville integral of a catalog function'

    def add_arguments(self, parser: argparse.ArgumentParser, config: ConfigParser):
        parser.add_argument('side', choices=list(FRACTIONAL_INTEGRALS.keys()))
        add_function_argument(parser, required=True)
        parser.add_argument('--c', type=float, required=True, help='base point')
        parser.add_argument('--y', type=float, required=True, help='evaluation point')
        parser.add_argument('--alpha', type=float, required=True, help='fractional order')
        add_quadrature_arguments(parser)

    def run(self, args: argparse.Namespace, config: ConfigParser) -> int:
        fn = get_test_function(args.function)
        value = FRACTIONAL_INTEGRALS[args.side](
            fn.f, args.c, FractionalOrder(args.alpha), args.y,
            options=get_quadrature_options_for_args(args, config)
        )
        print(format_display_float(value))
        return ExitCodes.SUCCESS


COMMAND = FractionalIntegralCommand()
