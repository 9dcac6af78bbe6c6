"""
Curated orbit and theta tables for the exceptional groups.

Both tables are JSON-lines files under :func:`nilcover.definitions.data_path`,
one record per row carrying ``schema_version`` and a ``provenance`` string.
Conditions on the degree ``n`` are stored structured, e.g.
``{"kind": "in", "values": [1, 3]}``, ``{"kind": "ge", "value": 2}``,
``{"kind": "not_in", "values": [2]}``, ``{"kind": "divides", "value": 24}``
(``n | 24``), ``{"kind": "all"}`` and ``{"kind": "na"}``.
"""
from dataclasses import dataclass
from functools import lru_cache
import json
import logging
import os
from typing import Dict, List, Optional, Tuple

from nilcover.cover import exceptional_character, parse_group
from nilcover.definitions import (
    ORBITS_FILE, SCHEMA_VERSION, THETA_FILE, data_path
)
from nilcover.exceptions import (
    DataFileException, UnknownOrbitException, UnknownThetaDegreeException
)
from nilcover.roots import integral_subsystem, parse_subsystem_label


logger = logging.getLogger(__name__)

GROUPS = ('G2', 'F4', 'E6', 'E7', 'E8')
CONDITION_KINDS = ('in', 'not_in', 'ge', 'divides', 'all', 'na')
DEFAULT_LIMIT = 60

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Condition:
    kind: str
    values: Tuple[int, ...] = ()
    value: Optional[int] = None

    @classmethod
    def from_dict(cls, data: Dict) -> 'Condition':
        kind = data.get('kind')
        if kind not in CONDITION_KINDS:
            raise DataFileException({'condition': data})
        return cls(kind, tuple(data.get('values', ())), data.get('value'))

    def to_dict(self) -> Dict:
        data = {'kind': self.kind}  # type: Dict
        if self.values:
            data['values'] = list(self.values)
        if self.value is not None:
            data['value'] = self.value
        return data

    @property
    def applicable(self) -> bool:
        return self.kind != 'na'

    def __str__(self) -> str:
        if self.kind == 'in':
            return 'n = ' + ', '.join(str(x) for x in self.values)
        if self.kind == 'not_in':
            return 'n != ' + ', '.join(str(x) for x in self.values)
        if self.kind == 'ge':
            return 'n >= {}'.format(self.value)
        if self.kind == 'divides':
            return 'n | {}'.format(self.value)
        if self.kind == 'all':
            return 'all n'
        return 'n.a.'


def condition_holds(condition: Condition, n: int) -> bool:
    assert condition.applicable, 'n.a. conditions hold for no n'
    if condition.kind == 'in':
        return n in condition.values
    if condition.kind == 'not_in':
        return n not in condition.values
    if condition.kind == 'ge':
        return n >= condition.value
    if condition.kind == 'divides':
        return condition.value % n == 0
    return True


@dataclass(frozen=True)
class ExceptionalOrbitRecord:
    group: str
    orbit: str
    special: bool
    even: bool
    stabilizer: str
    factors: Tuple[Pair, ...]
    tau: Optional[Pair]
    quasi_admissible: Condition
    raisable: Condition
    provenance: str
    variant_factors: Optional[Tuple[Pair, ...]] = None
    note: Optional[str] = None

    @property
    def levi_regular(self) -> bool:
        return '(' not in self.orbit


@dataclass(frozen=True)
class Degrees:
    """Explicit degrees plus an optional open range ``n >= start``"""
    values: Tuple[int, ...]
    start: Optional[int] = None

    def __contains__(self, n: int) -> bool:
        return n in self.values or (self.start is not None and n >= self.start)

    def __str__(self) -> str:
        text = ', '.join(str(x) for x in self.values)
        if self.start is None:
            return text
        return '{} or >= {}'.format(text, self.start) if text else \
            '>= {}'.format(self.start)


@dataclass(frozen=True)
class ThetaTableRecord:
    group: str
    degrees: Degrees
    phi_nu: str
    j_induction: str
    orbit: str
    dimension: int
    provenance: str
    note: Optional[str] = None
    phi_nu_by_degree: Tuple[Tuple[int, str], ...] = ()

    @property
    def levi_regular(self) -> bool:
        return '(' not in self.orbit

    def phi_nu_at(self, n: int) -> str:
        """Integral subsystem at degree ``n``, corrections over the printed"""
        return dict(self.phi_nu_by_degree).get(n, self.phi_nu)


def normalize_orbit_label(label: str) -> str:
    label = label.replace(' ', '')
    return '0' if label in ('{0}', '0', 'zero') else label


def _pairs(rows) -> Tuple[Pair, ...]:
    return tuple((int(a), int(b)) for a, b in rows)


def _read_rows(path: str) -> List[Dict]:
    if not os.path.exists(path):
        raise DataFileException({'path': path, 'reason': 'missing'})
    rows = []
    with open(path) as handle:
        for number, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
            except ValueError:
                raise DataFileException({'path': path, 'line': number})
            if row.get('schema_version') != SCHEMA_VERSION:
                raise DataFileException({
                    'path': path, 'line': number,
                    'schema_version': row.get('schema_version')
                })
            rows.append(row)
    logger.debug('loaded %d rows from %s', len(rows), path)
    return rows


def _orbit_record(row: Dict) -> ExceptionalOrbitRecord:
    try:
        record = ExceptionalOrbitRecord(
            group=row['group'],
            orbit=normalize_orbit_label(row['orbit']),
            special=bool(row['special']),
            even=bool(row['even']),
            stabilizer=row['stabilizer'],
            factors=_pairs(row['factors']),
            tau=tuple(row['tau']) if row.get('tau') else None,
            quasi_admissible=Condition.from_dict(row['quasi_admissible']),
            raisable=Condition.from_dict(row['raisable']),
            provenance=row['provenance'],
            variant_factors=(
                _pairs(row['variant_factors'])
                if row.get('variant_factors') else None
            ),
            note=row.get('note'),
        )
    except (KeyError, TypeError, ValueError):
        raise DataFileException({'row': row})
    if (not record.factors) != (record.stabilizer == '1'):
        raise DataFileException({'row': row, 'reason': 'stabilizer'})
    return record


def _theta_record(row: Dict) -> ThetaTableRecord:
    try:
        degrees = row['degrees']
        record = ThetaTableRecord(
            group=row['group'],
            degrees=Degrees(tuple(degrees['values']), degrees.get('from')),
            phi_nu=row['phi_nu'],
            j_induction=row['j_induction'],
            orbit=normalize_orbit_label(row['orbit']),
            dimension=int(row['dimension']),
            provenance=row['provenance'],
            note=row.get('note'),
            phi_nu_by_degree=tuple(sorted(
                (int(n), label)
                for n, label in row.get('phi_nu_by_degree', {}).items()
            )),
        )
    except (KeyError, TypeError, ValueError, AttributeError):
        raise DataFileException({'row': row})
    if record.dimension % 2:
        raise DataFileException({'row': row, 'reason': 'odd dimension'})
    if any(n not in record.degrees for n, _ in record.phi_nu_by_degree):
        raise DataFileException({'row': row, 'reason': 'stray degree'})
    return record


@lru_cache(maxsize=None)
def _load_orbits(directory: str) -> Tuple[ExceptionalOrbitRecord, ...]:
    return tuple(
        _orbit_record(row)
        for row in _read_rows(os.path.join(directory, ORBITS_FILE))
    )


@lru_cache(maxsize=None)
def _load_theta(directory: str) -> Tuple[ThetaTableRecord, ...]:
    return tuple(
        _theta_record(row)
        for row in _read_rows(os.path.join(directory, THETA_FILE))
    )


def orbit_records(group: Optional[str] = None) -> List[ExceptionalOrbitRecord]:
    return [
        record for record in _load_orbits(data_path())
        if group is None or record.group == group
    ]


def theta_records(group: Optional[str] = None) -> List[ThetaTableRecord]:
    return [
        record for record in _load_theta(data_path())
        if group is None or record.group == group
    ]


def is_distinguished_label(group: str, orbit: str) -> bool:
    """Bala-Carter labels naming the group itself, e.g. ``E8(b6)``"""
    label = normalize_orbit_label(orbit)
    return label == group or label.startswith(group + '(')


def lookup_orbit(group: str, orbit: str) -> ExceptionalOrbitRecord:
    label = normalize_orbit_label(orbit)
    for record in orbit_records(group):
        if record.orbit == label:
            return record
    raise UnknownOrbitException({'group': group, 'orbit': orbit})


def lookup_theta(group: str, n: int) -> ThetaTableRecord:
    if group not in GROUPS or n < 1:
        raise UnknownThetaDegreeException({'group': group, 'n': n})
    matches = [
        record for record in theta_records(group) if n in record.degrees
    ]
    assert len(matches) == 1, 'theta degrees of {} overlap or miss {}'.format(
        group, n
    )
    return matches[0]


def theta_subsystem_label(group: str, n: int) -> str:
    """Integral subsystem label computed from the exceptional character"""
    spec = parse_group(group, n=n)
    character = exceptional_character(spec)
    return integral_subsystem(spec.root_system, character.nu).label


@dataclass(frozen=True)
class TableDiff:
    group: str
    row: str
    column: str
    printed: str
    derived: str


def _format(values: Tuple[int, ...]) -> str:
    return '{' + ', '.join(str(x) for x in values) + '}'


def _printed_set(condition: Condition, limit: int) -> Tuple[int, ...]:
    if not condition.applicable:
        return ()
    return tuple(
        n for n in range(1, limit + 1) if condition_holds(condition, n)
    )


def derived_sets(
    record: ExceptionalOrbitRecord, limit: int = DEFAULT_LIMIT,
    factors: Optional[Tuple[Pair, ...]] = None
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Degrees ``n <= limit`` for which the stored invariants give a
    quasi-admissible orbit, and those for which they give a raisable one
    """
    from nilcover.admissibility import BdPair, splits

    factors = record.factors if factors is None else factors
    admissible = tuple(
        n for n in range(1, limit + 1)
        if all(splits(BdPair(*pair), n) for pair in factors)
    )
    if record.tau is None:
        return admissible, ()
    tau = BdPair(*record.tau)
    raisable = tuple(
        n for n in range(1, limit + 1) if not splits(tau, n)
    )
    return admissible, raisable


def diff_table(group: str, limit: int = DEFAULT_LIMIT) -> List[TableDiff]:
    """
    Rows of the orbit table where the printed columns and the sets derived
    from the stored invariants differ, including the variant invariants
    """
    diffs = []
    for record in orbit_records(group):
        admissible, raisable = derived_sets(record, limit)
        printed = _printed_set(record.quasi_admissible, limit)
        if printed != admissible:
            diffs.append(TableDiff(
                group, record.orbit, 'quasi_admissible', _format(printed),
                _format(admissible)
            ))
        printed = _printed_set(record.raisable, limit)
        if printed != raisable:
            diffs.append(TableDiff(
                group, record.orbit, 'raisable', _format(printed),
                _format(raisable)
            ))
        if record.variant_factors:
            variant, _ = derived_sets(record, limit, record.variant_factors)
            if variant != admissible:
                diffs.append(TableDiff(
                    group, record.orbit, 'variant_factors',
                    _format(admissible), _format(variant)
                ))
    return diffs


def diff_theta_table(
    group: str, limit: int = DEFAULT_LIMIT
) -> List[TableDiff]:
    """Degrees whose computed integral subsystem differs from the recorded"""
    diffs = []
    for n in range(1, limit + 1):
        record = lookup_theta(group, n)
        computed = theta_subsystem_label(group, n)
        recorded = record.phi_nu_at(n)
        if parse_subsystem_label(computed) != parse_subsystem_label(recorded):
            logger.debug('%s n=%d: computed %s, recorded %s', group, n,
                         computed, recorded)
            diffs.append(TableDiff(
                group, str(n), 'phi_nu', recorded, computed
            ))
    return diffs
