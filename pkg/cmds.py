#    cmds.py -- Command line interface for sincvide
#
#    This file is part of sincvide.
#
#    sincvide is free software; you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation; either version 2 of the License, or
#    (at your option) any later version.
#
#    sincvide is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with sincvide; if not, write to the Free Software
#    Foundation, Inc., 51 Franklin St, Fifth Floor, Boston, MA  02110-1301  USA
#

"""Command line front end.

Exit codes: 0 success, 1 usage, 2 evaluation error, 3 solver failure.
"""

import argparse
import json
import logging
import os
import sys

from .benchmarks import INTEGRANDS, lookup, registry
from .config import SweepConfig, parse_n_list
from .convergence import (
    indefinite_sweep,
    solver_sweep,
    summarize,
    write_report_csv,
    )
from .errors import (
    ConfigSyntaxError,
    DomainError,
    EvaluationError,
    InvalidParameter,
    SolverFailed,
    UnknownCase,
    UsageError,
    )
from .info import version_string, versions_dict
from .solver import max_error, solve
from .transform import MethodKind, build_grid

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EVALUATION = 2
EXIT_SOLVER = 3

METHODS = ('se', 'de')

LIST_FORMAT = (
    '%-14s SE: alpha=%g d_sup=%.6g  DE: alpha=%g d_sup=%.6g  %s\n')


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def _methods(args):
    if getattr(args, 'method', None):
        return [MethodKind.from_string(args.method)]
    return [MethodKind.SE, MethodKind.DE]


def _sweep_settings(args, config):
    epsilon = args.eps if args.eps is not None else config.epsilon
    if args.n_list is not None:
        try:
            n_list = parse_n_list(args.n_list)
        except InvalidParameter as e:
            raise UsageError('--n-list: %s' % e.reason) from e
    else:
        n_list = config.n_list
    eval_points = (
        args.eval_points if args.eval_points is not None
        else config.eval_points)
    jobs = args.jobs if args.jobs is not None else config.jobs
    if eval_points < 1:
        raise UsageError('--eval-points must be positive')
    if jobs < 1:
        raise UsageError('--jobs must be positive')
    return epsilon, n_list, eval_points, jobs


def _print_json(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + '\n')


def _write_reports(out, summary, reports):
    with open(out, 'w', newline='') as f:
        write_report_csv(f, reports)
    summary_path = os.path.splitext(out)[0] + '.json'
    with open(summary_path, 'w') as f:
        json.dump(summary, f, indent=2)
        f.write('\n')
    logging.info('Wrote %s and %s', out, summary_path)


def cmd_list(args, config):
    for case in registry():
        se = case.recipe(MethodKind.SE)
        de = case.recipe(MethodKind.DE)
        sys.stdout.write(LIST_FORMAT % (
            case.name, se.alpha, se.d_sup, de.alpha, de.d_sup,
            case.description))
    return EXIT_OK


def cmd_solve(args, config):
    if args.n < 1:
        raise UsageError('--n must be a positive integer')
    case = lookup(args.case)
    method = MethodKind.from_string(args.method)
    epsilon = args.eps if args.eps is not None else config.epsilon
    eval_points = (
        args.eval_points if args.eval_points is not None
        else config.eval_points)
    if eval_points < 1:
        raise UsageError('--eval-points must be positive')
    params = case.params(method, epsilon)
    grid = build_grid(case.problem.interval, params, args.n)
    sol = solve(case.problem, grid)
    _print_json({
        'case': case.name,
        'method': str(method),
        'N': grid.N,
        'h': grid.h,
        'max_error': max_error(sol, case.exact, eval_points),
        'residual': sol.residual,
        'node_count': grid.n,
        'alpha': params.alpha,
        'd_used': params.d,
        'epsilon': epsilon,
        })
    return EXIT_OK


def cmd_converge(args, config):
    case = lookup(args.case)
    epsilon, n_list, eval_points, jobs = _sweep_settings(args, config)
    reports = [
        solver_sweep(case, method, n_list, epsilon, eval_points, jobs)
        for method in _methods(args)]
    summary = summarize(case.name, epsilon, reports)
    _write_reports(args.out, summary, reports)
    _print_json(summary)
    return EXIT_OK


def cmd_indefinite(args, config):
    integrand = INTEGRANDS[args.integrand]
    epsilon, n_list, eval_points, jobs = _sweep_settings(args, config)
    reports = [
        indefinite_sweep(integrand, method, n_list, epsilon, eval_points, jobs)
        for method in _methods(args)]
    summary = summarize(integrand.name, epsilon, reports)
    if args.out is not None:
        _write_reports(args.out, summary, reports)
    _print_json(summary)
    return EXIT_OK


def _add_sweep_options(parser):
    parser.add_argument(
        '--n-list', type=str,
        help='Comma separated truncation orders (default 2,4,...,128).')
    parser.add_argument(
        '--eps', type=float,
        help='Margin subtracted from the supremum of d (default 0.05).')
    parser.add_argument(
        '--eval-points', type=int,
        help='Number of equispaced points for the error (default 999).')
    parser.add_argument(
        '--method', type=str.lower, choices=METHODS,
        help='Only sweep one method (default both).')


def make_parser():
    parser = _ArgumentParser(
        prog='sincvide',
        description='SE/DE-Sinc-Nystrom solvers for Volterra '
                    'integro-differential equations.')
    parser.add_argument(
        '--config', type=str, action='append', default=[],
        help='YAML file with a sincvide section; may be repeated, the '
             'first file defining a key wins.')
    parser.add_argument(
        '--debug', action='store_true', help='Show debug output.')
    parser.add_argument(
        '--version', action='store_true',
        help='Show version information and exit.')
    parser.add_argument(
        '--jobs', type=int,
        help='Number of sweep entries computed concurrently.')
    subparsers = parser.add_subparsers(dest='command')

    list_parser = subparsers.add_parser(
        'list', help='List the benchmark problems.')
    list_parser.set_defaults(func=cmd_list)

    solve_parser = subparsers.add_parser(
        'solve', help='Solve a benchmark problem at one N.')
    solve_parser.add_argument('--case', type=str, required=True)
    solve_parser.add_argument(
        '--method', type=str.lower, choices=METHODS, required=True)
    solve_parser.add_argument('--n', type=int, required=True)
    solve_parser.add_argument('--eps', type=float)
    solve_parser.add_argument('--eval-points', type=int)
    solve_parser.set_defaults(func=cmd_solve)

    converge_parser = subparsers.add_parser(
        'converge', help='Sweep N for both methods and fit the rates.')
    converge_parser.add_argument('--case', type=str, required=True)
    converge_parser.add_argument(
        '--out', type=str, required=True,
        help='CSV file to write; the summary goes next to it as .json.')
    _add_sweep_options(converge_parser)
    converge_parser.set_defaults(func=cmd_converge)

    indefinite_parser = subparsers.add_parser(
        'indefinite',
        help='Sweep N for Sinc indefinite integration of a test integrand.')
    indefinite_parser.add_argument(
        '--integrand', type=str, choices=sorted(INTEGRANDS), required=True)
    indefinite_parser.add_argument('--out', type=str)
    _add_sweep_options(indefinite_parser)
    indefinite_parser.set_defaults(func=cmd_indefinite)
    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write('%s: error: %s\n' % (parser.prog, e.message))
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.INFO,
        format='%(message)s')
    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)

    if args.version:
        sys.stdout.write('sincvide %s\n' % version_string())
        for name, version in sorted(versions_dict().items()):
            sys.stdout.write('  %s: %s\n' % (name, version))
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        logging.fatal('No command given')
        return EXIT_USAGE

    try:
        config = SweepConfig(args.config)
        return args.func(args, config)
    except (UsageError, UnknownCase, ConfigSyntaxError) as e:
        logging.fatal('%s', e)
        return EXIT_USAGE
    except (EvaluationError, InvalidParameter, DomainError) as e:
        logging.fatal('%s', e)
        return EXIT_EVALUATION
    except SolverFailed as e:
        logging.fatal('%s', e)
        return EXIT_SOLVER
    except OSError as e:
        logging.fatal('Unable to write output: %s', e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
