import pytest

from nilcover.admissibility import (
    BdPair, Verdict, always_raisable_bound, classify, classify_exceptional,
    classify_type_a, classify_type_bd, classify_type_c, splits,
    zero_orbit_verdict
)
from nilcover.cover import parse_group
from nilcover.definitions import Raisability
from nilcover.exceptions import (
    InvalidOrbitException, UnknownOrbitException, UnsupportedGroupException
)
from nilcover.partitions import Partition


def P(*parts):
    return Partition(parts)


@pytest.mark.parametrize('q1,q2,n,expected', [
    (6, 11, 4, True),
    (6, 11, 12, True),
    (6, 11, 3, False),
    (1, 5, 2, True),
    (1, 5, 3, False),
    (1, 0, 1, True),
    (1, 0, 2, False),
    (8, 0, 8, True),
    (8, 0, 3, False),
    (4, 15, 8, True),
])
def test_splits(q1, q2, n, expected):
    assert splits(BdPair(q1, q2), n) is expected


def test_splits_formulations_agree():
    # both formulations are evaluated on every call and must agree
    for q1 in range(-30, 31):
        for q2 in range(-30, 31):
            for n in range(1, 31):
                splits(BdPair(q1, q2), n)


def test_classify_type_a():
    spec = parse_group('GL', 6, n=2)
    verdict = classify_type_a(P(2, 2, 1, 1), spec)
    assert not verdict.quasi_admissible
    assert verdict.raisable is Raisability.Raisable
    assert [e.outcome for e in verdict.evidence] == [True, False]

    verdict = classify_type_a(P(3, 2, 1), spec)
    assert verdict.quasi_admissible
    assert verdict.raisable is Raisability.NotApplicable
    assert verdict.evidence == []

    verdict = classify_type_a(P(3, 3, 1), parse_group('GL', 7, n=3))
    assert verdict.quasi_admissible
    assert verdict.raisable is Raisability.NotRaisableByCriterion
    assert not verdict.contract_violation

    with pytest.raises(InvalidOrbitException):
        classify_type_a(P(3, 3, 3), spec)


def test_classify_type_a_uses_n_alpha():
    # Q(alpha^vee) = 2 halves the degree
    spec = parse_group('GL', 4, n=4, gl_form=(1, 0))
    assert classify_type_a(P(2, 2), spec).quasi_admissible
    assert not classify_type_a(P(2, 2), spec.with_degree(3)).quasi_admissible


def test_classify_type_bd():
    verdict = classify_type_bd(P(3, 3, 3), parse_group('SO2r+1', 4, n=3))
    assert verdict.quasi_admissible
    assert verdict.raisable is not Raisability.Raisable

    verdict = classify_type_bd(P(*[1] * 9), parse_group('SO2r+1', 4, n=3))
    assert not verdict.quasi_admissible
    assert verdict.raisable is Raisability.Raisable

    # no repeated even part and odd multiplicities at most two
    verdict = classify_type_bd(P(5, 1, 1), parse_group('SO2r+1', 3, n=2))
    assert verdict.raisable is Raisability.NotApplicable
    assert verdict.quasi_admissible


def test_classify_type_bd_forms():
    # Spin of degree n is read off the SO cover of degree 2n
    spin = classify_type_bd(P(3, 3, 3), parse_group('Spin2r+1', 4, n=3))
    so = classify_type_bd(P(3, 3, 3), parse_group('SO2r+1', 4, n=6))
    assert spin == so
    with pytest.raises(UnsupportedGroupException):
        classify_type_bd(P(3, 3, 3), parse_group('SO2r+1', 4, n=3, inv_bd=1))
    with pytest.raises(UnsupportedGroupException):
        classify_type_bd(P(2, 2), parse_group('Sp', 2, n=3))
    with pytest.raises(InvalidOrbitException):
        classify_type_bd(P(2, 1, 1, 1, 1, 1, 1, 1), parse_group(
            'SO2r+1', 4, n=3
        ))


def test_classify_type_c():
    verdict = classify_type_c(P(3, 3), parse_group('Sp', 3, n=3))
    assert verdict.quasi_admissible
    assert verdict.raisable is Raisability.NotRaisableByCriterion

    verdict = classify_type_c(P(2, 2, 2, 2), parse_group('Sp', 4, n=4))
    assert verdict.quasi_admissible
    assert verdict.raisable is Raisability.NotRaisableByCriterion

    verdict = classify_type_c(P(1, 1, 1, 1, 1, 1), parse_group('Sp', 3, n=2))
    assert not verdict.quasi_admissible
    assert verdict.raisable is Raisability.Raisable

    with pytest.raises(UnsupportedGroupException):
        classify_type_c(P(3, 3), parse_group('Sp', 3, n=3, inv_bd=2))
    with pytest.raises(InvalidOrbitException):
        classify_type_c(P(3, 2, 1), parse_group('Sp', 3, n=3))


def test_classify_exceptional():
    verdict = classify_exceptional('~A1', 'G2', 2)
    assert verdict.quasi_admissible
    assert verdict.raisable is Raisability.NotRaisableByCriterion

    verdict = classify_exceptional('~A1', 'G2', 5)
    assert not verdict.quasi_admissible
    assert verdict.raisable is Raisability.Raisable

    verdict = classify_exceptional('B3', 'F4', 8)
    assert verdict.quasi_admissible
    assert verdict.evidence[0].clause == '(8, 0) splits'
    verdict = classify_exceptional('B3', 'F4', 3)
    assert not verdict.quasi_admissible
    assert verdict.raisable is Raisability.Raisable

    verdict = classify_exceptional('A7', 'E8', 8)
    assert verdict.quasi_admissible
    assert verdict.raisable is Raisability.NotApplicable

    verdict = classify_exceptional('G2', 'G2', 7)
    assert verdict.quasi_admissible
    assert verdict.evidence == []

    with pytest.raises(UnknownOrbitException):
        classify_exceptional('B7', 'F4', 2)


def test_zero_orbit_verdict():
    assert zero_orbit_verdict(parse_group('E8', n=1)).quasi_admissible
    for n in range(2, 61):
        verdict = zero_orbit_verdict(parse_group('E8', n=n))
        assert not verdict.quasi_admissible
        assert verdict.raisable is Raisability.Raisable


def test_classify_dispatch():
    verdict = classify(P(3, 3), parse_group('Sp', 3, n=3))
    assert isinstance(verdict, Verdict)
    assert verdict.quasi_admissible
    assert classify('~A1', parse_group('G2', n=2)).quasi_admissible
    with pytest.raises(InvalidOrbitException):
        classify('3,3', parse_group('Sp', 3, n=3))


def test_contract_violation():
    assert Verdict(True, Raisability.Raisable).contract_violation
    assert not Verdict(False, Raisability.Raisable).contract_violation
    assert not Verdict(True, Raisability.NotApplicable).contract_violation


def test_always_raisable_bound():
    spec = parse_group('GL', 5, n=3)
    assert always_raisable_bound(P(2, 2, 1), spec) == 2
    assert always_raisable_bound(P(3, 2, 1), spec) is None
    spec = parse_group('GL', 5, n=3, gl_form=(2, 1))
    assert always_raisable_bound(P(2, 2, 1), spec) == 6
    for n in range(3, 12):
        verdict = classify_type_a(P(2, 2, 1), parse_group('GL', 5, n=n))
        assert verdict.raisable is Raisability.Raisable
