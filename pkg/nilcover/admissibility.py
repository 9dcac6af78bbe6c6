"""
Quasi-admissibility and raisability of split nilpotent orbits.

Every criterion reduces to the splitting of an (n, 2)-fold cover of a
simple factor of the stabilizer, see :func:`splits`. Classical orbits are
classified directly from their partitions; exceptional orbits use the
curated stabilizer data from :mod:`nilcover.exceptional`.
"""
from dataclasses import dataclass, field
from math import gcd
import logging
from typing import List, Optional, Union

from nilcover import exceptional
from nilcover.cover import CoverSpec, q_value
from nilcover.definitions import (
    CartanFamily, ClassicalType, IsogenyForm, Raisability
)
from nilcover.exceptions import (
    InvalidOrbitException, SplitCriterionMismatchException,
    UnsupportedGroupException, ZeroQuadraticFormException
)
from nilcover.partitions import (
    Partition, frak_a, frak_b, is_valid, multiplicities
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BdPair:
    """
    Brylinski-Deligne invariants of the n-fold restriction (``q1``) and of
    the metaplectic double cover pulled back to the same factor (``q2``)
    """
    q1: int
    q2: int


@dataclass(frozen=True)
class Evidence:
    factor: str
    clause: str
    outcome: bool


@dataclass
class Verdict:
    quasi_admissible: bool
    raisable: Raisability
    evidence: List[Evidence] = field(default_factory=list)

    @property
    def contract_violation(self) -> bool:
        """Both properties at once, reported but never raised"""
        return self.quasi_admissible and self.raisable is Raisability.Raisable


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def splits(pair: BdPair, n: int) -> bool:
    """
    Whether the (n, 2)-fold cover with invariants ``pair`` splits, i.e.
    ``lcm(n, 2)`` divides ``(n*/n) q1 + (n*/2) q2``.
    """
    n_star = _lcm(n, 2)
    divisible = (
        (n_star // n) * pair.q1 + (n_star // 2) * pair.q2
    ) % n_star == 0
    if pair.q2 % 2 == 0:
        by_cases = pair.q1 % n == 0
    else:
        by_cases = n // gcd(n, pair.q1) == 2
    if divisible != by_cases:
        raise SplitCriterionMismatchException(
            {'q1': pair.q1, 'q2': pair.q2, 'n': n}
        )
    return divisible


def _raisability(applicable: bool, raisable: bool) -> Raisability:
    if raisable:
        return Raisability.Raisable
    if applicable:
        return Raisability.NotRaisableByCriterion
    return Raisability.NotApplicable


def _divides(a: int, b: int) -> bool:
    return b % a == 0


def _validate(p: Partition, spec: CoverSpec, t: ClassicalType):
    size = t.partition_size(spec.rank)
    if not is_valid(p, t, size):
        raise InvalidOrbitException(
            {'partition': list(p), 'group': spec.name, 'size': size}
        )


def classify_type_a(p: Partition, spec: CoverSpec) -> Verdict:
    _validate(p, spec, ClassicalType.A)
    repeated = [(x, d) for x, d in multiplicities(p) if d >= 2]
    if not repeated:
        return Verdict(True, Raisability.NotApplicable)
    q = q_value(spec, 0)
    if q == 0:
        raise ZeroQuadraticFormException({'group': spec.name})
    na = spec.n // gcd(spec.n, q)
    evidence = [
        Evidence('part {} (x{})'.format(x, d), 'n_alpha={} | {}'.format(na, x),
                 _divides(na, x))
        for x, d in repeated
    ]
    quasi_admissible = all(item.outcome for item in evidence)
    logger.debug('type A %s n_alpha=%d: %s', p, na, evidence)
    return Verdict(
        quasi_admissible,
        _raisability(True, not quasi_admissible),
        evidence
    )


def _split_parity_clause(
    n: int, part: int, counter: int, name: str
) -> Evidence:
    """
    Clause for a part whose stabilizer factor is symplectic, ``counter`` is
    the frak_A or frak_B value of the part
    """
    factor = 'part {}'.format(part)
    if n % 2:
        return Evidence(
            factor, '{} | {} and {} even'.format(n, part, name),
            _divides(n, part) and counter % 2 == 0
        )
    if counter % 2 == 0:
        return Evidence(factor, '{} | {}'.format(n, part), _divides(n, part))
    return Evidence(
        factor, 'gcd({}, {}) = {}'.format(n, part, n // 2),
        gcd(n, part) == n // 2
    )


def _orthogonal_clause(n: int, part: int, multiplicity: int) -> Evidence:
    """Clause for a part whose stabilizer factor is orthogonal"""
    factor = 'part {} (x{})'.format(part, multiplicity)
    if n % 2:
        return Evidence(factor, '{} | {}'.format(n, part), _divides(n, part))
    if multiplicity >= 4:
        return Evidence(
            factor, '{} | {}'.format(n, 2 * part), _divides(n, 2 * part)
        )
    return Evidence(
        factor, '{} | {}'.format(n, 4 * part), _divides(n, 4 * part)
    )


def _classify_pairs(
    p: Partition, n: int, symplectic_parity: int, counter
) -> Verdict:
    evidence = []
    quasi_admissible = True
    applicable = False
    raisable = False
    for part, d in multiplicities(p):
        if part % 2 == symplectic_parity:
            if d < 2:
                continue
            clause = _split_parity_clause(
                n, part, counter(p, part), counter.__name__
            )
            evidence.append(clause)
            quasi_admissible &= clause.outcome
            applicable = True
            # the raisability clauses are the negations of the same tests
            raisable |= not clause.outcome
        else:
            if d >= 3:
                clause = _orthogonal_clause(n, part, d)
                evidence.append(clause)
                quasi_admissible &= clause.outcome
            if d >= 4:
                outcome = not _divides(n, 2 * part)
                evidence.append(Evidence(
                    'part {} (x{})'.format(part, d),
                    '{} does not divide {}'.format(n, 2 * part), outcome
                ))
                applicable = True
                raisable |= outcome
    verdict = Verdict(
        quasi_admissible, _raisability(applicable, raisable), evidence
    )
    logger.debug('%s n=%d: %s', p, n, verdict)
    return verdict


def classify_type_bd(p: Partition, spec: CoverSpec) -> Verdict:
    """
    Orthogonal orbits of SO covers restricted from SL (``inv_bd = 2``).
    Spin covers of degree n are classified as the SO cover of degree 2n,
    which has the same exceptional root subsystem.
    """
    if spec.family not in (CartanFamily.B, CartanFamily.D):
        raise UnsupportedGroupException({'group': spec.name})
    _validate(p, spec, spec.classical_type)
    n = spec.n
    if spec.form is IsogenyForm.SC:
        if spec.inv_bd != 1:
            raise UnsupportedGroupException(
                {'group': spec.name, 'inv_bd': spec.inv_bd}
            )
        n = 2 * spec.n
    elif spec.inv_bd != 2:
        raise UnsupportedGroupException(
            {'group': spec.name, 'inv_bd': spec.inv_bd}
        )
    # even parts carry symplectic factors
    return _classify_pairs(p, n, 0, frak_b)


def classify_type_c(p: Partition, spec: CoverSpec) -> Verdict:
    if spec.family is not CartanFamily.C or spec.inv_bd != 1:
        raise UnsupportedGroupException(
            {'group': spec.name, 'inv_bd': spec.inv_bd}
        )
    _validate(p, spec, ClassicalType.C)
    # odd parts carry symplectic factors
    return _classify_pairs(p, spec.n, 1, frak_a)


def classify_exceptional(orbit: str, group: str, n: int) -> Verdict:
    record = exceptional.lookup_orbit(group, orbit)
    evidence = []
    for pair in record.factors:
        pair = BdPair(*pair)
        evidence.append(Evidence(
            record.stabilizer, '({}, {}) splits'.format(pair.q1, pair.q2),
            splits(pair, n)
        ))
    quasi_admissible = all(item.outcome for item in evidence)
    if record.tau is None:
        raisable = Raisability.NotApplicable
    else:
        tau = BdPair(*record.tau)
        outcome = not splits(tau, n)
        evidence.append(Evidence(
            'tau', '({}, {}) does not split'.format(tau.q1, tau.q2), outcome
        ))
        raisable = _raisability(True, outcome)
    return Verdict(quasi_admissible, raisable, evidence)


def distinguished_verdict(orbit: str) -> Verdict:
    """
    Distinguished orbits have a finite reductive stabilizer: no factor to
    split and nothing to raise
    """
    return Verdict(
        True, Raisability.NotApplicable,
        [Evidence(orbit, 'distinguished', True)]
    )


def zero_orbit_verdict(spec: CoverSpec) -> Verdict:
    """
    The zero orbit has the whole group as stabilizer: invariants
    ``(inv_bd, 0)`` for both criteria
    """
    pair = BdPair(spec.inv_bd, 0)
    outcome = splits(pair, spec.n)
    return Verdict(
        outcome,
        _raisability(True, not outcome),
        [Evidence(spec.name, '({}, 0) splits'.format(spec.inv_bd), outcome)]
    )


def classify(orbit: Union[Partition, str], spec: CoverSpec) -> Verdict:
    if not spec.family.is_classical:
        return classify_exceptional(str(orbit), spec.name, spec.n)
    if not isinstance(orbit, Partition):
        raise InvalidOrbitException({'orbit': orbit, 'group': spec.name})
    verdict = {
        CartanFamily.A: classify_type_a,
        CartanFamily.B: classify_type_bd,
        CartanFamily.C: classify_type_c,
        CartanFamily.D: classify_type_bd,
    }[spec.family](orbit, spec)
    if verdict.contract_violation:
        logger.warning('%s in %s^(%d) is both quasi-admissible and raisable',
                       orbit, spec.name, spec.n)
    return verdict


def always_raisable_bound(p: Partition, spec: CoverSpec) -> Optional[int]:
    """
    Bound past which a GL orbit with a repeated part is always raisable:
    every ``n > |Q(alpha^vee)| * (smallest repeated part)``
    """
    repeated = [x for x, d in multiplicities(p) if d >= 2]
    if not repeated:
        return None
    return abs(q_value(spec, 0)) * min(repeated)
