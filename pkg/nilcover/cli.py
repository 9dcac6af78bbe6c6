"""
Command line front end.

Every command writes one JSON document to stdout. Errors go to stderr as
``{"error": ..., "payload": ...}`` with exit code 1, or 2 when two
independent computations disagree.
"""
import argparse
from dataclasses import dataclass
import json
import logging
import sys
from typing import Any, List, Optional, TextIO, Tuple

from nilcover import exceptional
from nilcover.admissibility import classify
from nilcover.characters import c_coefficient
from nilcover.cover import (
    CoverSpec, exceptional_character, is_persistent, parse_group
)
from nilcover.definitions import DEFAULT_GL_FORM
from nilcover.exceptions import (
    NilcoverAssertionException, NilcoverBaseException, ValidationException
)
from nilcover.partitions import Partition
from nilcover.roots import integral_subsystem
from nilcover.serializer import dumps
from nilcover.theta import (
    closed_form_orbit, pipeline_orbit, theta_orbit, verify_theta_properties
)


logger = logging.getLogger(__name__)

COMMANDS = ('classify', 'theta', 'c-coeff', 'subsystem', 'tables')
TABLES = exceptional.GROUPS + tuple(
    'theta-' + group for group in exceptional.GROUPS
) + ('classical',)

# families swept by ``tables --which classical`` and their smallest rank
SWEEP_GROUPS = (('GL', 2), ('SO2r+1', 1), ('Sp', 1), ('SO2r', 2))


@dataclass
class CommandRequest:
    command: str
    group: Optional[str] = None
    rank: Optional[int] = None
    n: int = 1
    orbit: Optional[str] = None
    inv_bd: Optional[int] = None
    gl_form: Tuple[int, int] = DEFAULT_GL_FORM
    check: bool = False
    table: bool = False
    which: Optional[str] = None
    diff: bool = False
    limit: int = exceptional.DEFAULT_LIMIT
    max_rank: int = 12
    max_n: int = 10
    pretty: bool = False

    def validate(self):
        if self.command not in COMMANDS:
            raise ValidationException({'command': self.command})
        if self.n < 1:
            raise ValidationException({'n': self.n})
        required = {
            'classify': ('group', 'orbit'),
            'theta': ('group',),
            'c-coeff': ('rank',),
            'subsystem': ('group',),
            'tables': ('which',),
        }[self.command]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValidationException(
                {'command': self.command, 'missing': missing}
            )
        if self.command == 'tables' and self.which not in TABLES:
            raise ValidationException({'which': self.which})


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as validation errors instead of exiting"""

    def error(self, message):
        raise ValidationException({'usage': message})


def parse_form(value: str) -> Tuple[int, int]:
    try:
        a, b = (int(x) for x in value.split(','))
    except ValueError:
        raise ValidationException({'form': value})
    return a, b


def _add_group(parser: argparse.ArgumentParser):
    parser.add_argument('--group', help='GL, SL, Sp, SO2r+1, SO2r, '
                        'Spin2r+1, Spin2r, G2, F4, E6, E7 or E8')
    parser.add_argument('--rank', type=int)
    parser.add_argument('--n', type=int, default=1)
    parser.add_argument('--inv-bd', dest='inv_bd', type=int)
    parser.add_argument('--form', dest='gl_form', type=parse_form,
                        default=DEFAULT_GL_FORM, help='a,b of the GL form')


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='nilcover')
    parser.add_argument('--pretty', action='store_true')
    parser.add_argument('--verbose', action='store_true')
    commands = parser.add_subparsers(dest='command')

    command = commands.add_parser('classify')
    _add_group(command)
    command.add_argument('--orbit', help='partition "3,3,1" or label "~A1"')

    command = commands.add_parser('theta')
    _add_group(command)
    command.add_argument('--check', action='store_true',
                         help='verify the theta orbit properties')

    command = commands.add_parser('c-coeff')
    command.add_argument('--r', dest='rank', type=int)
    command.add_argument('--n', type=int, default=1)
    command.add_argument('--form', dest='gl_form', type=parse_form,
                         default=DEFAULT_GL_FORM)
    command.add_argument('--table', action='store_true',
                         help='include the Whittaker dimension table')

    command = commands.add_parser('subsystem')
    _add_group(command)

    command = commands.add_parser('tables')
    command.add_argument('--which', choices=TABLES)
    command.add_argument('--diff', action='store_true')
    command.add_argument('--limit', type=int,
                         default=exceptional.DEFAULT_LIMIT)
    command.add_argument('--max-rank', dest='max_rank', type=int, default=12)
    command.add_argument('--max-n', dest='max_n', type=int, default=10)
    return parser


def parse_request(argv: Optional[List[str]] = None) -> CommandRequest:
    namespace = vars(build_parser().parse_args(argv))
    namespace.pop('verbose', None)
    if not namespace.get('command'):
        raise ValidationException({'usage': 'missing command'})
    request = CommandRequest(**namespace)
    request.validate()
    return request


def _spec(request: CommandRequest) -> CoverSpec:
    return parse_group(
        request.group, request.rank, request.n, request.inv_bd,
        request.gl_form
    )


def _orbit(request: CommandRequest, spec: CoverSpec):
    if spec.family.is_classical:
        return Partition.from_string(request.orbit)
    return request.orbit


def _exceptional_rows(group: str, limit: int) -> List[dict]:
    rows = []
    for record in exceptional.orbit_records(group):
        admissible, raisable = exceptional.derived_sets(record, limit)
        rows.append({
            'orbit': record.orbit,
            'stabilizer': record.stabilizer,
            'factors': [list(pair) for pair in record.factors],
            'tau': list(record.tau) if record.tau else None,
            'quasi_admissible': str(record.quasi_admissible),
            'raisable': str(record.raisable),
            'derived_quasi_admissible': list(admissible),
            'derived_raisable': list(raisable),
            'provenance': record.provenance,
        })
    return rows


def _theta_rows(group: str) -> List[dict]:
    return [
        {
            'degrees': str(record.degrees),
            'phi_nu': record.phi_nu,
            'phi_nu_by_degree': {
                str(n): label for n, label in record.phi_nu_by_degree
            },
            'j_induction': record.j_induction,
            'orbit': record.orbit,
            'dimension': record.dimension,
            'provenance': record.provenance,
        }
        for record in exceptional.theta_records(group)
    ]


def sweep_classical_theta(max_rank: int, max_n: int) -> List[dict]:
    """
    Closed-form theta orbits of the classical families next to the orbits
    obtained through the duality pipeline, where the pipeline applies
    """
    rows = []
    for group, smallest in SWEEP_GROUPS:
        for rank in range(smallest, max_rank + 1):
            for n in range(1, max_n + 1):
                spec = parse_group(group, rank, n)
                closed = closed_form_orbit(spec)
                pipeline = pipeline_orbit(spec) if is_persistent(spec) \
                    else None
                rows.append({
                    'group': spec.name, 'n': n, 'closed_form': closed,
                    'pipeline': pipeline,
                    'agree': pipeline is None or pipeline == closed,
                })
    logger.debug('classical sweep: %d cells', len(rows))
    return rows


def _tables(request: CommandRequest) -> Tuple[Any, bool]:
    """Returns the document to print and whether a diff was found"""
    which = request.which
    if which == 'classical':
        rows = sweep_classical_theta(request.max_rank, request.max_n)
        if request.diff:
            rows = [row for row in rows if not row['agree']]
            return rows, bool(rows)
        return rows, False
    if which.startswith('theta-'):
        group = which[len('theta-'):]
        if request.diff:
            diffs = exceptional.diff_theta_table(group, request.limit)
            return diffs, bool(diffs)
        return _theta_rows(group), False
    if request.diff:
        diffs = exceptional.diff_table(which, request.limit)
        # variant rows document known misprints and never fail the diff
        failing = [d for d in diffs if d.column != 'variant_factors']
        return diffs, bool(failing)
    return _exceptional_rows(which, request.limit), False


def execute(request: CommandRequest) -> Tuple[Any, int]:
    """Runs a validated request, returns the document and the exit code"""
    if request.command == 'tables':
        document, found = _tables(request)
        return document, 1 if found else 0
    if request.command == 'c-coeff':
        spec = parse_group('GL', request.rank, request.n,
                           gl_form=request.gl_form)
        return c_coefficient(spec, with_table=request.table), 0
    spec = _spec(request)
    if request.command == 'classify':
        return classify(_orbit(request, spec), spec), 0
    if request.command == 'theta':
        if request.check:
            return verify_theta_properties(spec), 0
        return theta_orbit(spec), 0
    character = exceptional_character(spec)
    return integral_subsystem(spec.root_system, character.nu), 0


def run(
    request: CommandRequest, stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        document, status = execute(request)
    except NilcoverAssertionException as e:
        print(_error(e), file=stderr)
        return 2
    except NilcoverBaseException as e:
        print(_error(e), file=stderr)
        return 1
    print(dumps(document, pretty=request.pretty), file=stdout)
    return status


def _error(e: NilcoverBaseException) -> str:
    return json.dumps(
        {'error': e.error, 'payload': e.payload}, sort_keys=True, default=str
    )


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    logging.basicConfig(
        level=logging.DEBUG if '--verbose' in argv else logging.WARNING,
        stream=sys.stderr
    )
    try:
        request = parse_request(argv)
    except NilcoverBaseException as e:
        print(_error(e), file=sys.stderr)
        return 1
    return run(request)


if __name__ == '__main__':
    sys.exit(main())
