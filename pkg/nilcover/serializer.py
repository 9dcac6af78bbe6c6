"""
JSON encoding of nilcover records.

Every serializer turns a record into plain JSON-compatible data and back.
:func:`dumps` gives deterministic text (sorted keys), which keeps table
diffs byte-stable across runs.
"""
from abc import ABC, abstractmethod
from fractions import Fraction
import json
from typing import Any, Dict, List, Union

from nilcover.admissibility import Evidence, Verdict
from nilcover.characters import CoefficientAudit
from nilcover.cover import CoverSpec
from nilcover.definitions import CartanFamily, IsogenyForm, Raisability
from nilcover.exceptional import TableDiff
from nilcover.exceptions import ValidationException
from nilcover.partitions import Partition
from nilcover.roots import CartanLabel, SubsystemReport
from nilcover.theta import ThetaCheckReport, ThetaOrbitResult


JSON = Union[Dict[str, Any], List[Any], str, int, bool, None]


class BaseSerializer(ABC):
    @abstractmethod
    def serialize(self, value: Any) -> JSON:
        """Returns JSON-compatible data"""
        pass  # pragma: no cover

    @abstractmethod
    def deserialize(self, value: JSON) -> Any:
        """Rebuilds the record from JSON-compatible data"""
        pass  # pragma: no cover


def _orbit(value: Union[Partition, str]) -> JSON:
    if isinstance(value, Partition):
        return list(value.parts)
    return value


def _load_orbit(value: JSON) -> Union[Partition, str]:
    if isinstance(value, list):
        return Partition(tuple(value))
    return str(value)


def _fraction(value: Fraction) -> Union[int, str]:
    """Integers stay integers, other rationals become ``"p/q"``"""
    if value.denominator == 1:
        return value.numerator
    return str(value)


class PartitionSerializer(BaseSerializer):
    """Partitions are arrays of parts in weakly decreasing order"""

    def serialize(self, value: Partition) -> JSON:
        return list(value.parts)

    def deserialize(self, value: JSON) -> Partition:
        if not isinstance(value, list):
            raise ValidationException({'partition': value})
        return Partition(tuple(value))


class VerdictSerializer(BaseSerializer):
    def serialize(self, value: Verdict) -> JSON:
        return {
            'quasi_admissible': value.quasi_admissible,
            'raisable': value.raisable.value,
            'contract_violation': value.contract_violation,
            'evidence': [
                {
                    'factor': item.factor, 'clause': item.clause,
                    'outcome': item.outcome
                }
                for item in value.evidence
            ],
        }

    def deserialize(self, value: JSON) -> Verdict:
        assert isinstance(value, dict)
        return Verdict(
            quasi_admissible=bool(value['quasi_admissible']),
            raisable=Raisability(value['raisable']),
            evidence=[
                Evidence(item['factor'], item['clause'], item['outcome'])
                for item in value.get('evidence', [])
            ]
        )


class CoverSpecSerializer(BaseSerializer):
    def serialize(self, value: CoverSpec) -> JSON:
        data = {
            'group': value.name,
            'family': value.family.value,
            'rank': value.rank,
            'n': value.n,
            'form': value.form.value,
            'inv_bd': value.inv_bd,
        }  # type: Dict[str, Any]
        if value.is_gl:
            data['gl_form'] = list(value.gl_form)
        if value.persistent is not None:
            data['persistent'] = value.persistent
        return data

    def deserialize(self, value: JSON) -> CoverSpec:
        assert isinstance(value, dict)
        kwargs = {}  # type: Dict[str, Any]
        if 'gl_form' in value:
            kwargs['gl_form'] = tuple(value['gl_form'])
        return CoverSpec(
            CartanFamily(value['family']), value['rank'], value['n'],
            IsogenyForm(value['form']), value['inv_bd'],
            persistent=value.get('persistent'), **kwargs
        )


class SubsystemReportSerializer(BaseSerializer):
    """
    Component labels are strings such as ``"A4"`` or ``"~A2"``, members and
    simples are indices into the root list of the ambient system
    """

    def serialize(self, value: SubsystemReport) -> JSON:
        return {
            'label': value.label,
            'components': [
                {'label': str(label), 'simples': list(nodes)}
                for label, nodes in value.components
            ],
            'members': list(value.members),
            'simples': list(value.simples),
        }

    def deserialize(self, value: JSON) -> SubsystemReport:
        assert isinstance(value, dict)
        return SubsystemReport(
            members=tuple(value['members']),
            simples=tuple(value['simples']),
            components=tuple(
                (CartanLabel.parse(item['label']), tuple(item['simples']))
                for item in value['components']
            )
        )


class ThetaOrbitSerializer(BaseSerializer):
    def serialize(self, value: ThetaOrbitResult) -> JSON:
        return {
            'group': value.group,
            'n': value.n,
            'orbit': _orbit(value.orbit),
            'via_closed_form': value.via_closed_form,
            'verdict': (
                VerdictSerializer().serialize(value.verdict)
                if value.verdict is not None else None
            ),
            'levi': value.levi,
            'dimension': value.dimension,
            'phi_nu': value.phi_nu,
        }

    def deserialize(self, value: JSON) -> ThetaOrbitResult:
        assert isinstance(value, dict)
        verdict = value.get('verdict')
        return ThetaOrbitResult(
            group=value['group'],
            n=value['n'],
            orbit=_load_orbit(value['orbit']),
            via_closed_form=value['via_closed_form'],
            verdict=(
                VerdictSerializer().deserialize(verdict)
                if verdict is not None else None
            ),
            levi=value.get('levi'),
            dimension=value.get('dimension'),
            phi_nu=value.get('phi_nu'),
        )


class CoefficientAuditSerializer(BaseSerializer):
    """
    ``dim_table`` maps a cycle type written as ``"2,1"`` to the dimension of
    the corresponding Whittaker space
    """

    def serialize(self, value: CoefficientAudit) -> JSON:
        return {
            'r': value.r,
            'n': value.n,
            'n_alpha': value.n_alpha,
            'lambda': list(value.shape.parts),
            'c': _fraction(value.value),
            'lhs': _fraction(value.lhs),
            'rhs': _fraction(value.rhs),
            'dim_table': {
                ','.join(str(x) for x in mu.parts): _fraction(dim)
                for mu, dim in value.dim_table.items()
            },
        }

    def deserialize(self, value: JSON) -> CoefficientAudit:
        assert isinstance(value, dict)
        return CoefficientAudit(
            r=value['r'],
            n=value['n'],
            n_alpha=value['n_alpha'],
            shape=Partition(tuple(value['lambda'])),
            lhs=Fraction(value['lhs']),
            rhs=Fraction(value['rhs']),
            dim_table={
                Partition.from_string(key): Fraction(dim)
                for key, dim in value['dim_table'].items()
            }
        )


class ThetaCheckSerializer(BaseSerializer):
    def serialize(self, value: ThetaCheckReport) -> JSON:
        return {
            'group': value.group,
            'n': value.n,
            'orbit': _orbit(value.orbit),
            'checked': value.checked,
            'verdict': (
                VerdictSerializer().serialize(value.verdict)
                if value.verdict is not None else None
            ),
            'levi': value.levi,
            'generic': value.generic,
            'evidence': list(value.evidence),
        }

    def deserialize(self, value: JSON) -> ThetaCheckReport:
        assert isinstance(value, dict)
        verdict = value.get('verdict')
        return ThetaCheckReport(
            group=value['group'],
            n=value['n'],
            orbit=_load_orbit(value['orbit']),
            checked=value['checked'],
            verdict=(
                VerdictSerializer().deserialize(verdict)
                if verdict is not None else None
            ),
            levi=value.get('levi'),
            generic=value.get('generic'),
            evidence=list(value.get('evidence', [])),
        )


class TableDiffSerializer(BaseSerializer):
    def serialize(self, value: TableDiff) -> JSON:
        return {
            'group': value.group,
            'row': value.row,
            'column': value.column,
            'printed': value.printed,
            'derived': value.derived,
        }

    def deserialize(self, value: JSON) -> TableDiff:
        assert isinstance(value, dict)
        return TableDiff(
            value['group'], value['row'], value['column'], value['printed'],
            value['derived']
        )


TYPE_MAPPING = {
    'partition': (Partition, PartitionSerializer()),
    'verdict': (Verdict, VerdictSerializer()),
    'cover': (CoverSpec, CoverSpecSerializer()),
    'subsystem': (SubsystemReport, SubsystemReportSerializer()),
    'theta': (ThetaOrbitResult, ThetaOrbitSerializer()),
    'coefficient': (CoefficientAudit, CoefficientAuditSerializer()),
    'theta_check': (ThetaCheckReport, ThetaCheckSerializer()),
    'table_diff': (TableDiff, TableDiffSerializer()),
}


def lookup_serializer(value: Any) -> BaseSerializer:
    for type_, serializer in TYPE_MAPPING.values():
        if isinstance(value, type_):
            return serializer
    raise ValidationException({'type': type(value).__name__})


def serialize(value: Any) -> JSON:
    """
    Encodes a record into JSON-compatible data. Lists and dicts are walked,
    plain JSON values pass through.
    """
    if isinstance(value, (list, tuple)):
        return [serialize(item) for item in value]
    if isinstance(value, dict):
        return {str(key): serialize(item) for key, item in value.items()}
    if value is None or isinstance(value, (str, int, bool)):
        return value
    return lookup_serializer(value).serialize(value)


def deserialize(kind: str, data: JSON) -> Any:
    """
    Decodes data produced by :func:`serialize`

    :params kind: key of :data:`TYPE_MAPPING`, e.g. ``verdict``
    """
    if kind not in TYPE_MAPPING:
        raise ValidationException({'kind': kind})
    return TYPE_MAPPING[kind][1].deserialize(data)


def dumps(value: Any, pretty: bool = False) -> str:
    return json.dumps(
        serialize(value), sort_keys=True, indent=2 if pretty else None
    )
