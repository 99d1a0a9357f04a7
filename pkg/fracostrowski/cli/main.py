import argparse
import logging
import sys
from configparser import ConfigParser
from typing import List, Optional

from fracostrowski.commands import ExitCodes, get_commands_for_configuration
from fracostrowski.config.app_config import get_app_config, get_missing_sections
from fracostrowski.errors import (
    CertificateError,
    ConfigError,
    DomainError,
    NonConvergenceError,
    QuadratureError,
    UnknownFunctionError,
    UnknownTheoremError,
    UsageError
)
from fracostrowski.utils.logging import configure_logging


LOGGER = logging.getLogger(__name__)


EXIT_CODE_BY_EXCEPTION = [
    (CertificateError, ExitCodes.CERTIFICATE_ERROR),
    ((UnknownFunctionError, UnknownTheoremError, ConfigError, UsageError), ExitCodes.USAGE_ERROR),
    (DomainError, ExitCodes.DOMAIN_ERROR),
    ((NonConvergenceError, QuadratureError), ExitCodes.QUADRATURE_ERROR),
    (OSError, ExitCodes.IO_ERROR)
]


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError('%s: %s' % (self.prog, message))


def parse_args(config: ConfigParser, argv: Optional[List[str]] = None):
    parser = ArgumentParser(
        prog='fracostrowski',
        description='Fractional Ostrowski inequalities: evaluation and verification'
    )
    parser.add_argument(
        '--debug', action='store_true', default=False,
        help='enable debug output'
    )
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    commands = get_commands_for_configuration(config)
    for name, command in commands.items():
        command_parser = subparsers.add_parser(name, help=command.help)
        command.add_arguments(command_parser, config)
    args = parser.parse_args(argv)
    return args, commands[args.command]


def get_exit_code_for_exception(e: Exception) -> Optional[int]:
    for exception_types, exit_code in EXIT_CODE_BY_EXCEPTION:
        if isinstance(e, exception_types):
            return exit_code
    return None


def main(argv: Optional[List[str]] = None) -> int:
    config = get_app_config()
    try:
        missing_sections = get_missing_sections(config)
        if missing_sections:
            raise ConfigError('app config is missing sections: %s' % missing_sections)
        args, command = parse_args(config, argv)
        if args.debug:
            logging.getLogger('fracostrowski').setLevel('DEBUG')
        LOGGER.debug('args: %s', args)
        return command.run(args, config)
    except Exception as e:  # pylint: disable=broad-except
        exit_code = get_exit_code_for_exception(e)
        if exit_code is None:
            raise
        LOGGER.debug('exiting with %d', exit_code, exc_info=True)
        print('error: %s' % e, file=sys.stderr)
        return exit_code


def main_entry_point():
    configure_logging()
    sys.exit(main())


if __name__ == '__main__':
    main_entry_point()
