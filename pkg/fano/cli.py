"""Command line entry point: fano verify | form | lattice | group."""
import argparse
import logging
import sys
from typing import Sequence

from fano import albanese, fibrations
from fano.errors import FanoError
from fano.fermat import CURVES
from fano.forms import parse_form_expr
from fano.group import enumerate_group, line_label, line_orbit, line_vector
from fano.verify import DEFAULT_SEED, DEFAULT_SUITE, emit_report, exit_code, run_suite, suite_names

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(name)s:%(levelname)s:%(message)s'

EXIT_OK = 0
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='fano', description='Exact verification of Fano surface lattice claims.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for timings, -vv for invariants')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    verify = commands.add_parser('verify', help='run a verification suite')
    verify.add_argument('--suite', default=DEFAULT_SUITE, help=f'one of {", ".join(suite_names())}')
    verify.add_argument('--json', metavar='PATH', help='also write the reports as json to PATH')
    verify.add_argument('--seed', type=int, default=DEFAULT_SEED, help='seed of the property checks')

    form = commands.add_parser('form', help='fibration data of a linear form')
    form.add_argument('--eval', required=True, metavar='EXPR', help='a form such as "x4 - (w^2)*x5"')
    form.add_argument('--pair', metavar='EXPR2', help='a second form, prints the intersection of the fibres')

    lattice = commands.add_parser('lattice', help='omega on a candidate period lattice')
    lattice.add_argument('--candidate', required=True, help=f'one of {", ".join(albanese.CANDIDATES)}')

    group = commands.add_parser('group', help='the group G(3,3,5)')
    group.add_argument('--order', action='store_true', help='print the order')
    group.add_argument('--orbit', action='store_true', help='list the orbit of the line C(e1 - e2)')
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(format=LOG_FORMAT, level=level)


def run_verify(args) -> int:
    reports = run_suite(args.suite, args.seed)
    emit_report(reports, 'text', sys.stdout, suite=args.suite, seed=args.seed)
    if args.json:
        with open(args.json, 'w', encoding='utf-8') as f:
            emit_report(reports, 'json', f, suite=args.suite, seed=args.seed)
    return exit_code(reports)


def run_form(args) -> int:
    expr = parse_form_expr(args.eval)
    form = expr.form
    print(f'form: {form}')
    print(f'in lattice of forms: {"yes" if fibrations.lambda_star_membership(form) else "no"}')
    values = fibrations.fiber_intersections(form)
    for label in CURVES:
        print(f'F.{label} = {values.curves[label]}')
    print(f'F.C = {values.incidence}')
    print(f'genus: {fibrations.fiber_genus(form)}')
    print(f'class: {fibrations.fiber_class_coordinates(form)}')
    if args.pair:
        other = parse_form_expr(args.pair).form
        print(f'pair degree with {other}: {fibrations.fiber_pair_degree(form, other)}')
    return EXIT_OK


def run_lattice(args) -> int:
    report = albanese.lattice_report(args.candidate)
    print(f'{report.name} ({report.display_name})')
    width = max(len(x) for row in report.omega for x in row)
    for row in report.omega:
        print(' '.join(x.rjust(width) for x in row))
    print(f'det: {report.determinant}')
    print(f'pfaffian: {report.pfaffian}')
    print(f'integral: {"yes" if report.integral else "no"}')
    print(f'galois image: {report.galois_image}')
    return EXIT_OK


def _format_line(vector) -> str:
    i, j, beta = line_label(vector)
    return f'e{i} - w^{beta} e{j}'


def run_group(args) -> int:
    show_all = not (args.order or args.orbit)
    if args.order or show_all:
        print(f'order: {len(enumerate_group())}')
    if args.orbit or show_all:
        orbit = sorted(line_orbit(line_vector(1, 2, 0)), key=line_label)
        print(f'orbit of C(e1 - e2): {len(orbit)} lines')
        for vector in orbit:
            print(f'  {_format_line(vector)}')
    return EXIT_OK


COMMANDS = {
    'verify': run_verify,
    'form': run_form,
    'lattice': run_lattice,
    'group': run_group,
}


def main(argv: Sequence[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (FanoError, OSError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
