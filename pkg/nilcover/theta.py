"""
Wavefront orbits of theta representations
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
import logging
from typing import List, Optional, Tuple, Union

from nilcover import exceptional
from nilcover.admissibility import (
    Verdict, classify, distinguished_verdict, zero_orbit_verdict
)
from nilcover.cover import (
    CoverSpec, degree_for_spin, exceptional_character, is_persistent,
    q_value, quadratic_form
)
from nilcover.definitions import (
    CartanFamily, ClassicalType, IsogenyForm, Raisability
)
from nilcover.duality import d_som, pseudo_levi_from_subsystem
from nilcover.exceptions import (
    ThetaCheckException, UnknownOrbitException, UnsupportedGroupException
)
from nilcover.partitions import (
    Partition, collapse, is_valid, multiplicities, regular_partition, union
)
from nilcover.roots import integral_subsystem


logger = logging.getLogger(__name__)

Orbit = Union[Partition, str]


def orbit_gl(r: int, n: int) -> Partition:
    """``(n^a b)`` with ``r = n a + b``, ``0 <= b < n``"""
    a, b = divmod(r, n)
    return Partition.power(n, a, b)


def orbit_collapsed(size: int, k: int, t: ClassicalType) -> Partition:
    """``(k^a b)_t`` with ``size = k a + b``"""
    p = orbit_gl(size, k)
    if t is ClassicalType.A:
        return p
    return collapse(p, t)


def _prefixed(size: int, k: int, t: ClassicalType) -> Partition:
    """``((k + 1) u (k^a b))_t`` with ``size - k - 1 = k a + b``"""
    rest = size - k - 1
    if rest <= 0:
        return regular_partition(t, size // 2)
    return collapse(union(Partition((k + 1,)), orbit_gl(rest, k)), t)


def _reduced_degree(spec: CoverSpec) -> int:
    return spec.n // gcd(spec.n, spec.inv_bd)


def closed_form_orbit(spec: CoverSpec) -> Partition:
    r, n = spec.rank, spec.n
    family = spec.family
    if family is CartanFamily.A:
        if r == 1:
            return Partition((1,))
        return orbit_gl(r, n // gcd(n, q_value(spec, 0)))
    if family is CartanFamily.B:
        return orbit_collapsed(2 * r + 1, _reduced_degree(spec),
                               ClassicalType.B)
    if family is CartanFamily.C:
        if n % 2:
            return orbit_collapsed(2 * r, n, ClassicalType.C)
        if n % 4 == 0:
            return orbit_collapsed(2 * r, n // 2, ClassicalType.C)
        return _prefixed(2 * r, n // 2, ClassicalType.C)
    if family is CartanFamily.D:
        k = _reduced_degree(spec)
        if k % 2:
            return orbit_collapsed(2 * r, k, ClassicalType.D)
        return _prefixed(2 * r, k, ClassicalType.D)
    raise UnsupportedGroupException({'group': spec.name})


def pipeline_orbit(spec: CoverSpec) -> Partition:
    """
    Orbit obtained through the exceptional character, its integral
    subsystem and the duality of the resulting pseudo-Levi. SO covers go
    through the Spin cover of degree ``n / gcd(n, inv_bd)``.
    """
    if not spec.family.is_classical:
        raise UnsupportedGroupException({'group': spec.name})
    if spec.form is IsogenyForm.SO:
        spec = CoverSpec(
            spec.family, spec.rank, degree_for_spin(spec), IsogenyForm.SC, 1
        )
    if not is_persistent(spec):
        raise UnsupportedGroupException(
            {'group': spec.name, 'n': spec.n, 'reason': 'not persistent'}
        )
    rs = spec.root_system
    character = exceptional_character(spec)
    report = integral_subsystem(rs, character.nu)
    pair = pseudo_levi_from_subsystem(report, rs)
    logger.debug('%s^(%d): p1=%s p2=%s', spec.name, spec.n, pair.p1, pair.p2)
    return d_som(pair)


@dataclass(frozen=True)
class LeviDecomposition:
    """
    Levi subgroup whose regular orbit is a given orbit: GL factors of the
    listed sizes and a same-type factor acting on ``same_type`` coordinates
    of the natural representation
    """
    family: ClassicalType
    gl_blocks: Tuple[int, ...]
    same_type: int = 0

    def __str__(self) -> str:
        names = []
        if self.same_type:
            prefix = {
                ClassicalType.B: 'SO', ClassicalType.C: 'Sp',
                ClassicalType.D: 'SO'
            }[self.family]
            names.append('{}_{}'.format(prefix, self.same_type))
        names.extend('GL_{}'.format(k) for k in self.gl_blocks)
        return ' x '.join(names) or '1'


def levi_decomposition(
    p: Partition, t: ClassicalType
) -> Optional[LeviDecomposition]:
    """Levi whose regular orbit is ``p``, ``None`` if there is none"""
    if t is ClassicalType.A:
        return LeviDecomposition(t, tuple(p.parts))
    odd = [(x, d) for x, d in multiplicities(p) if d % 2]
    gl_blocks = []
    for x, d in multiplicities(p):
        gl_blocks.extend([x] * (d // 2))
    if t is ClassicalType.C:
        if len(odd) > 1 or (odd and odd[0][0] % 2):
            return None
        same_type = odd[0][0] if odd else 0
    elif t is ClassicalType.B:
        if len(odd) != 1 or odd[0][0] % 2 == 0:
            return None
        same_type = odd[0][0]
    else:
        if not odd:
            same_type = 0
        elif len(odd) == 2 and odd[1][0] == 1 and odd[0][0] % 2:
            same_type = odd[0][0] + 1
        else:
            return None
    return LeviDecomposition(t, tuple(gl_blocks), same_type)


def _unit(size: int, index: int) -> List[Fraction]:
    return [Fraction(int(i == index)) for i in range(size)]


def generic_levi(spec: CoverSpec, levi: LeviDecomposition) -> bool:
    """
    Every factor of the Levi carries a theta representation whose orbit is
    regular, i.e. the restricted covers are generic
    """
    rs = spec.root_system
    if rs.dimension >= 2:
        first, second = _unit(rs.dimension, 0), _unit(rs.dimension, 1)
        coroot = [a - b for a, b in zip(first, second)]
        q = quadratic_form(spec, coroot)
    else:
        q = Fraction(1)
    n_gl = spec.n // gcd(spec.n, int(q))
    for k in levi.gl_blocks:
        if orbit_gl(k, n_gl) != Partition((k,)):
            logger.debug('GL_%d factor of %s is not generic', k, spec.name)
            return False
    t = levi.family
    if t is ClassicalType.A or not levi.same_type:
        return True
    rank = levi.same_type // 2
    if rank < 2 and t is not ClassicalType.C:
        return True
    factor = CoverSpec(spec.family, rank, spec.n, spec.form, spec.inv_bd)
    return closed_form_orbit(factor) == regular_partition(t, rank)


@dataclass
class ThetaOrbitResult:
    group: str
    n: int
    orbit: Orbit
    via_closed_form: bool
    verdict: Optional[Verdict]
    levi: Optional[str] = None
    dimension: Optional[int] = None
    phi_nu: Optional[str] = None


def theta_orbit(spec: CoverSpec) -> ThetaOrbitResult:
    if not spec.family.is_classical:
        record = exceptional.lookup_theta(spec.name, spec.n)
        verdict = _exceptional_verdict(record.orbit, spec)
        return ThetaOrbitResult(
            group=spec.name, n=spec.n, orbit=record.orbit,
            via_closed_form=False, verdict=verdict,
            levi=record.orbit if record.levi_regular else None,
            dimension=record.dimension, phi_nu=record.phi_nu_at(spec.n)
        )
    orbit = closed_form_orbit(spec)
    t = spec.classical_type
    size = t.partition_size(spec.rank)
    assert is_valid(orbit, t, size), 'closed form left the orbit set'
    levi = levi_decomposition(orbit, t)
    return ThetaOrbitResult(
        group=spec.name, n=spec.n, orbit=orbit, via_closed_form=True,
        verdict=classify(orbit, spec),
        levi=str(levi) if levi is not None else None
    )


def _exceptional_verdict(orbit: str, spec: CoverSpec) -> Optional[Verdict]:
    if orbit == '0':
        return zero_orbit_verdict(spec)
    try:
        return classify(orbit, spec)
    except UnknownOrbitException:
        if exceptional.is_distinguished_label(spec.name, orbit):
            return distinguished_verdict(orbit)
        logger.warning('theta orbit %s of %s^(%d) has no orbit row',
                       orbit, spec.name, spec.n)
        return None


@dataclass
class ThetaCheckReport:
    group: str
    n: int
    orbit: Orbit
    checked: bool
    verdict: Optional[Verdict] = None
    levi: Optional[str] = None
    generic: Optional[bool] = None
    evidence: List[str] = field(default_factory=list)


def verify_theta_properties(spec: CoverSpec) -> ThetaCheckReport:
    """
    Checks that the theta orbit is quasi-admissible and not raisable, and
    when it is the regular orbit of a Levi that every Levi factor is
    generic. Non-persistent covers and exceptional orbits without an orbit
    row are reported unchecked.
    """
    result = theta_orbit(spec)
    if not is_persistent(spec):
        return ThetaCheckReport(spec.name, spec.n, result.orbit, checked=False)
    verdict = result.verdict
    if verdict is None:
        return ThetaCheckReport(
            spec.name, spec.n, result.orbit, checked=False,
            evidence=['{} has no {} orbit row'.format(result.orbit, spec.name)]
        )
    if not verdict.quasi_admissible or \
            verdict.raisable is Raisability.Raisable:
        raise ThetaCheckException({
            'group': spec.name, 'n': spec.n, 'orbit': str(result.orbit),
            'evidence': [
                '{}: {} -> {}'.format(e.factor, e.clause, e.outcome)
                for e in verdict.evidence
            ]
        })
    generic = None
    if spec.family.is_classical:
        levi = levi_decomposition(result.orbit, spec.classical_type)
        if levi is not None:
            generic = generic_levi(spec, levi)
            if not generic:
                raise ThetaCheckException({
                    'group': spec.name, 'n': spec.n,
                    'orbit': str(result.orbit), 'levi': str(levi)
                })
    return ThetaCheckReport(
        spec.name, spec.n, result.orbit, checked=True, verdict=verdict,
        levi=result.levi, generic=generic,
        evidence=[e.clause for e in verdict.evidence]
    )
