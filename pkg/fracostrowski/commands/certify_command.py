import argparse
import logging
from configparser import ConfigParser

from fracostrowski.functions.catalog import get_test_function
from fracostrowski.functions.convexity import ConvexityVerdict, certify_test_function

from . import Command, ExitCodes


LOGGER = logging.getLogger(__name__)


def format_verdict(verdict: ConvexityVerdict) -> str:
    if verdict.passed:
        return 'passed'
    witness = verdict.witness
    return 'failed: x=%.17g, y=%.17g, t=%.17g, violation=%.17g' % (
        witness.x, witness.y, witness.t, witness.violation
    )


def add_certificate_arguments(parser: argparse.ArgumentParser, config: ConfigParser):
    parser.add_argument(
        '--grid-density', type=int,
        default=config['certify'].getint('grid_density'),
        help='grid points per axis of the certifier'
    )


class CertifyCommand(Command):
    help = "certify harmonic s-convexity of |f'|^q on [a, b]"

    def add_arguments(self, parser: argparse.ArgumentParser, config: ConfigParser):
        parser.add_argument('function', help='name of the test function')
        parser.add_argument('--a', type=float, required=True)
        parser.add_argument('--b', type=float, required=True)
        parser.add_argument('--s', type=float, default=1.0)
        parser.add_argument('--q', type=float, default=1.0)
        add_certificate_arguments(parser, config)

    def run(self, args: argparse.Namespace, config: ConfigParser) -> int:
        fn = get_test_function(args.function)
        verdict = certify_test_function(
            fn, args.a, args.b, args.s, args.q, grid_density=args.grid_density
        )
        print(format_verdict(verdict))
        return ExitCodes.SUCCESS if verdict.passed else ExitCodes.FAILED


COMMAND = CertifyCommand()
