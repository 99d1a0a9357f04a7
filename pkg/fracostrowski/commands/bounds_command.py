import argparse
import logging
from configparser import ConfigParser

from fracostrowski.config.run_config import GridPoint
from fracostrowski.errors import CertificateError
from fracostrowski.functions.catalog import get_test_function
from fracostrowski.functions.convexity import certify_test_function
from fracostrowski.inequalities.ostrowski import (
    BoundReport,
    Interval,
    Params,
    applicable_bound_ids,
    corollary_bound
)
from fracostrowski.runners.sweep_runner import (
    SweepColumns,
    evaluate_point,
    report_to_row,
    write_rows
)
from fracostrowski.utils.formatting import format_display_float

from . import (
    Command,
    ExitCodes,
    add_config_argument,
    add_function_argument,
    add_output_arguments,
    add_quadrature_arguments,
    get_run_config_for_args
)
from .certify_command import add_certificate_arguments, format_verdict


LOGGER = logging.getLogger(__name__)


def format_report(report: BoundReport) -> str:
    lines = ['abs_sf: %s' % format_display_float(report.abs_sf)]
    lines.extend(
        '%s: %s' % (bound_id, format_display_float(bound))
        for bound_id, bound in report.bounds.items()
    )
    lines.append('tightest: %s' % report.tightest)
    lines.append('violations: %s' % (', '.join(report.violations) or 'none'))
    return '\n'.join(lines)


def format_corollary_bounds(m: float, point: GridPoint) -> str:
    iv = Interval(a=point.a, b=point.b, x=point.x)
    pr = Params(alpha=point.alpha, s=point.s, q=point.q)
    return '\n'.join(
        'corollary %s (M=%s): %s' % (
            bound_id, format_display_float(m),
            format_display_float(corollary_bound(bound_id, m, iv, pr))
        )
        for bound_id in applicable_bound_ids(pr)
    )


class BoundsCommand(Command):
    help = 'evaluate |S_f| and the five upper bounds at a point'

    def add_arguments(self, parser: argparse.ArgumentParser, config: ConfigParser):
        add_config_argument(parser)
        add_function_argument(parser)
        point_group = parser.add_argument_group('point')
        for name in SweepColumns.INPUTS:
            point_group.add_argument('--%s' % name, type=float, required=True)
        parser.add_argument(
            '--force', action='store_true',
            help='evaluate even when the convexity certificate fails'
        )
        parser.add_argument(
            '--bound-m', type=float,
            help='also print the corollary bounds for |f\'| <= M'
        )
        add_certificate_arguments(parser, config)
        add_quadrature_arguments(parser)
        add_output_arguments(parser)

    def run(self, args: argparse.Namespace, config: ConfigParser) -> int:
        run_config = get_run_config_for_args(args, config)
        fn = get_test_function(run_config.function_name)
        point = GridPoint(**{name: getattr(args, name) for name in SweepColumns.INPUTS})
        # validates the point before certifying it
        Interval(a=point.a, b=point.b, x=point.x)
        Params(alpha=point.alpha, s=point.s, q=point.q)

        verdict = certify_test_function(
            fn, point.a, point.b, point.s, point.q, grid_density=args.grid_density
        )
        if not verdict.passed:
            if not args.force:
                raise CertificateError(
                    'certificate failed for %s: %s' % (fn, format_verdict(verdict))
                )
            LOGGER.warning('certificate failed for %s, forced: %s', fn, format_verdict(verdict))

        report = evaluate_point(
            point, fn,
            slack=config['bounds'].getfloat('violation_slack'),
            options=run_config.quadrature_options
        )
        print(format_report(report))
        if args.bound_m is not None:
            print(format_corollary_bounds(args.bound_m, point))
        if run_config.output.path:
            write_rows(
                [report_to_row(point, report)], SweepColumns.ALL,
                path=run_config.output.path,
                output_format=run_config.output.format
            )
        return ExitCodes.FAILED if report.has_violations else ExitCodes.SUCCESS


COMMAND = BoundsCommand()
