import argparse
import logging
from configparser import ConfigParser

from fracostrowski.errors import UsageError
from fracostrowski.numerics.specfun import HypArgs, beta_fn, gamma_fn, hyp2f1
from fracostrowski.utils.formatting import format_display_float

from . import Command, ExitCodes


LOGGER = logging.getLogger(__name__)


class SpecialFunctionKinds:
    GAMMA = 'gamma'
    BETA = 'beta'
    HYP2F1 = '2f1'


SPECIAL_FUNCTIONS = {
    SpecialFunctionKinds.GAMMA: (1, gamma_fn),
    SpecialFunctionKinds.BETA: (2, beta_fn),
    SpecialFunctionKinds.HYP2F1: (4, lambda a, b, c, z: hyp2f1(HypArgs(a=a, b=b, c=c, z=z)))
}


def evaluate_special_function(kind: str, values) -> float:
    arity, fn = SPECIAL_FUNCTIONS[kind]
    if len(values) != arity:
        raise UsageError('%s expects %d arguments, got %d' % (kind, arity, len(values)))
    return fn(*values)


class SpecialFunctionCommand(Command):
    help = 'evaluate Gamma, Beta or 2F1 at a point'

    def add_arguments(self, parser: argparse.ArgumentParser, config: ConfigParser):
        parser.add_argument('kind', choices=list(SPECIAL_FUNCTIONS.keys()))
        parser.add_argument('values', type=float, nargs='*')

    def run(self, args: argparse.Namespace, config: ConfigParser) -> int:
        value = evaluate_special_function(args.kind, args.values)
        print(format_display_float(value))
        return ExitCodes.SUCCESS


COMMAND = SpecialFunctionCommand()
