from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from nilcover.definitions import ClassicalType
from nilcover.exceptions import (
    InvalidOrbitException, InvalidPartitionException, ParityMismatchException,
    PartNotFoundException
)
from nilcover.partitions import (
    Partition, all_partitions, collapse, dominates, expansion, frak_a, frak_b,
    is_special, is_valid, minus_box, multiplicities, plus_box,
    regular_partition, transpose, union, valid_partitions, zero_partition
)


B, C, D = ClassicalType.B, ClassicalType.C, ClassicalType.D

partitions = st.lists(st.integers(1, 9), max_size=9).map(Partition.from_parts)


def P(*parts):
    return Partition(parts)


def _parity_types(size):
    return (B,) if size % 2 else (C, D)


def test_partition_invariants():
    p = Partition.from_parts([1, 3, 3, 0])
    assert p.parts == (3, 3, 1)
    assert p.size == 7
    assert len(p) == 3
    assert str(p) == '(3,3,1)'
    assert Partition().size == 0

    with pytest.raises(InvalidPartitionException):
        Partition((1, 2))
    with pytest.raises(InvalidPartitionException):
        Partition((2, 0))
    with pytest.raises(InvalidPartitionException):
        Partition.from_string('3,x')


def test_partition_from_string_and_power():
    assert Partition.from_string('3,3,1') == P(3, 3, 1)
    assert Partition.from_string('(4, 2)') == P(4, 2)
    assert Partition.from_string('') == P()
    assert Partition.power(3, 2, 1) == P(3, 3, 1)
    assert Partition.power(3, 0, 0) == P()
    assert multiplicities(P(3, 3, 1)) == [(3, 2), (1, 1)]


def test_transpose():
    assert transpose(P()) == P()
    assert transpose(P(3, 1)) == P(2, 1, 1)
    # ((a+1)^b a^(n-b)) -> (n^a b) with a = 1, b = 2, n = 3
    assert transpose(P(2, 2, 1)) == P(3, 2)


@given(partitions)
@settings(max_examples=200)
def test_transpose_is_involution(p):
    assert transpose(transpose(p)) == p
    assert transpose(p).size == p.size


def test_transpose_involution_exhaustive():
    for size in range(16):
        for p in all_partitions(size):
            assert transpose(transpose(p)) == p


@given(partitions, partitions)
@settings(max_examples=200)
def test_transpose_reverses_dominance(p, q):
    if p.size != q.size:
        return
    assert dominates(p, q) == dominates(transpose(q), transpose(p))


def test_union_and_boxes():
    assert union(P(3, 1), P(2, 2)) == P(3, 2, 2, 1)
    assert plus_box(P(3, 3)) == P(4, 3)
    assert plus_box(P()) == P(1)
    assert minus_box(P(3, 3)) == P(3, 2)
    assert minus_box(P(2, 1)) == P(2)
    with pytest.raises(InvalidPartitionException):
        minus_box(P())


def test_is_valid():
    assert is_valid(P(3, 3), C, 6)
    assert not is_valid(P(2, 1), C, 3)
    assert is_valid(P(2, 2, 1), B, 5)
    assert not is_valid(P(2, 1, 1, 1), B, 5)
    assert not is_valid(P(3, 3), C, 8)
    assert is_valid(P(5, 1), D, 6)
    assert not is_valid(P(4, 2), D, 6)
    assert is_valid(P(4, 2), C, 6)
    assert is_valid(P(2, 1), ClassicalType.A, 3)


def test_collapse_examples():
    assert collapse(P(3, 3), C) == P(3, 3)
    # (n^a b) with n = 3, a = 1, b = 1 collapses to (n^(a-1), n-1, b+1)
    assert collapse(P(3, 1), C) == P(2, 2)
    assert collapse(P(4, 1), B) == P(3, 1, 1)
    assert collapse(P(6), D) == P(5, 1)
    with pytest.raises(ParityMismatchException):
        collapse(P(2, 1), C)
    with pytest.raises(ParityMismatchException):
        collapse(P(2, 2), B)


def test_collapse_is_largest_valid_below():
    for size in range(1, 15):
        for t in _parity_types(size):
            valid = list(valid_partitions(size, t))
            for p in all_partitions(size):
                result = collapse(p, t)
                assert is_valid(result, t, size)
                assert dominates(p, result)
                below = [q for q in valid if dominates(p, q)]
                assert all(dominates(result, q) for q in below)
                assert collapse(result, t) == result


def test_expansion_examples():
    assert expansion(P(3, 3), C) == P(3, 3)
    assert expansion(P(3, 1), C) == P(4)
    assert expansion(P(2, 2, 1), B) == P(2, 2, 1)
    # two minimal candidates, the lexicographically smallest wins
    assert expansion(P(3, 2, 1), C) == P(3, 3)
    with pytest.raises(ParityMismatchException):
        expansion(P(3), D)


@pytest.mark.parametrize('parts', [(2,), (4,), (10,)])
def test_expansion_of_even_row_in_type_d(parts):
    with pytest.raises(InvalidOrbitException) as e:
        expansion(P(*parts), D)
    assert e.value.payload == {'partition': list(parts), 'type': D.value}


def test_expansion_is_minimal_valid_above():
    for size in range(1, 13):
        for t in _parity_types(size):
            valid = list(valid_partitions(size, t))
            for p in all_partitions(size):
                if t is D and p == P(size):
                    continue
                result = expansion(p, t)
                assert is_valid(result, t, size)
                assert dominates(result, p)
                assert not any(
                    q != result and dominates(q, p) and dominates(result, q)
                    for q in valid
                )
                assert expansion(result, t) == result


def test_frak_counters():
    p = P(5, 4, 2, 2, 1)
    assert frak_a(p, 2) == 1
    assert frak_b(p, 2) == 1
    assert frak_a(p, 5) == 0
    assert frak_b(p, 4) == 1
    with pytest.raises(PartNotFoundException):
        frak_a(p, 3)
    with pytest.raises(PartNotFoundException):
        frak_b(p, 6)


def test_is_special():
    assert is_special(P(3, 1, 1), B)
    assert not is_special(P(2, 1, 1), C)
    assert is_special(P(2, 2), C)
    assert is_special(P(3, 3), D)
    assert not is_special(P(3, 2, 2, 1), D)
    assert is_special(P(2, 1), ClassicalType.A)


def test_regular_and_zero_partitions():
    assert regular_partition(B, 2) == P(5)
    assert regular_partition(C, 3) == P(6)
    assert regular_partition(D, 3) == P(5, 1)
    assert regular_partition(ClassicalType.A, 4) == P(4)
    assert zero_partition(B, 2) == P(1, 1, 1, 1, 1)
    assert zero_partition(D, 2) == P(1, 1, 1, 1)


def test_partition_generators():
    assert len(list(all_partitions(5))) == 7
    assert list(all_partitions(0)) == [P()]
    assert list(all_partitions(3)) == [P(3), P(2, 1), P(1, 1, 1)]
    assert list(valid_partitions(4, C)) == [
        P(4), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)
    ]
    assert P(3, 1) not in list(valid_partitions(4, C))
