import argparse
import logging
from configparser import ConfigParser

from fracostrowski.functions.catalog import get_test_function
from fracostrowski.inequalities.ostrowski import hh_fractional_check
from fracostrowski.utils.formatting import format_display_float

from . import (
    Command,
    ExitCodes,
    add_function_argument,
    add_quadrature_arguments,
    get_quadrature_options_for_args
)


LOGGER = logging.getLogger(__name__)


class HermiteHadamardCommand(Command):
    help = 'evaluate the fractional Hermite-Hadamard triple'

    def add_arguments(self, parser: argparse.ArgumentParser, config: ConfigParser):
        add_function_argument(parser, required=True)
        parser.add_argument('--a', type=float, required=True)
        parser.add_argument('--b', type=float, required=True)
        parser.add_argument('--alpha', type=float, required=True)
        parser.add_argument(
            '--slack', type=float, default=config['hh'].getfloat('slack'),
            help='admissible ordering slack'
        )
        add_quadrature_arguments(parser)

    def run(self, args: argparse.Namespace, config: ConfigParser) -> int:
        fn = get_test_function(args.function)
        triple = hh_fractional_check(
            fn, args.a, args.b, args.alpha,
            options=get_quadrature_options_for_args(args, config)
        )
        for name, value in triple._asdict().items():
            print('%s: %s' % (name, format_display_float(value)))
        if triple.is_ordered(slack=args.slack):
            return ExitCodes.SUCCESS
        print('ordering violated')
        return ExitCodes.FAILED


COMMAND = HermiteHadamardCommand()
