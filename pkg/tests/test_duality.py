from fractions import Fraction

import pytest

from nilcover.definitions import CartanFamily, ClassicalType
from nilcover.duality import (
    Block, PseudoLeviPair, blocks_from_coroots, d_bv, d_ls, d_som,
    pair_from_blocks, pseudo_levi_from_components, pseudo_levi_from_subsystem,
    regular_contribution
)
from nilcover.exceptions import (
    DualityConventionException, InvalidOrbitException
)
from nilcover.partitions import (
    Partition, dominates, is_special, regular_partition, valid_partitions,
    zero_partition
)
from nilcover.roots import CartanLabel, build, integral_subsystem


A, B, C, D = (
    ClassicalType.A, ClassicalType.B, ClassicalType.C, ClassicalType.D
)


def P(*parts):
    return Partition(parts)


def _sizes(t):
    if t is B:
        return range(1, 12, 2)
    return range(2, 13, 2)


def test_d_ls_examples():
    assert d_ls(P(3, 1), A) == P(2, 1, 1)
    for t, rank in ((A, 4), (B, 3), (C, 3), (D, 4)):
        assert d_ls(regular_partition(t, rank), t) == zero_partition(t, rank)
        assert d_ls(zero_partition(t, rank), t) == regular_partition(t, rank)
    with pytest.raises(InvalidOrbitException):
        d_ls(P(2, 1), C)


@pytest.mark.parametrize('t', [B, C, D])
def test_d_ls_reverses_order(t):
    for size in _sizes(t):
        valid = list(valid_partitions(size, t))
        images = {p: d_ls(p, t) for p in valid}
        for p in valid:
            image = images[p]
            assert is_special(image, t)
            assert d_ls(d_ls(image, t), t) == image
            for q in valid:
                if dominates(p, q):
                    assert dominates(images[q], image)


def test_d_bv_endpoints():
    # zero orbit goes to the regular orbit of the dual type
    assert d_bv(zero_partition(B, 3), B) == P(6)
    assert d_bv(zero_partition(C, 3), C) == P(7)
    assert d_bv(zero_partition(D, 4), D) == P(7, 1)
    assert d_bv(zero_partition(A, 4), A) == P(4)
    assert d_bv(P(7), B) == zero_partition(C, 3)
    # ((a+1)^b a^(n-b)) -> (n^a b) with a = 2, b = 1, n = 3
    assert d_bv(P(3, 2, 2), A) == P(3, 3, 1)
    with pytest.raises(InvalidOrbitException):
        d_bv(P(2, 1, 1, 1, 1, 1, 1), B)


@pytest.mark.parametrize('t', [B, C, D])
def test_d_som_with_empty_p1_is_d_bv(t):
    for size in _sizes(t):
        rank = size // 2
        for p in valid_partitions(size, t):
            pair = PseudoLeviPair(t, rank, Partition(), p)
            assert d_som(pair) == d_bv(p, t)


def test_pseudo_levi_from_components():
    pair = pseudo_levi_from_components(
        [CartanLabel(CartanFamily.C, 2), CartanLabel(CartanFamily.A, 2)],
        C, 5
    )
    assert pair.p1 == P(4)
    assert pair.p2 == P(3, 3)
    assert d_som(pair) == P(3, 3, 3, 1, 1)

    # uncovered coordinates are GL1 factors
    pair = pseudo_levi_from_components([CartanLabel(CartanFamily.A, 1)], B, 3)
    assert pair.p1 == Partition()
    assert pair.p2 == P(2, 2, 1, 1, 1)

    with pytest.raises(DualityConventionException):
        pseudo_levi_from_components([CartanLabel(CartanFamily.G, 2)], C, 3)
    with pytest.raises(DualityConventionException):
        pseudo_levi_from_components([CartanLabel(CartanFamily.C, 4)], C, 3)


def test_regular_contribution():
    assert regular_contribution(Block(CartanFamily.A, 3), A) == P(3)
    assert regular_contribution(Block(CartanFamily.A, 3), C) == P(3, 3)
    assert regular_contribution(Block(CartanFamily.B, 2), B) == P(5)
    assert regular_contribution(Block(CartanFamily.D, 3), D) == P(5, 1)
    with pytest.raises(DualityConventionException):
        regular_contribution(Block(CartanFamily.E, 6), D)


def test_pair_from_blocks():
    pair = pair_from_blocks([Block(CartanFamily.A, 2)], B, 2)
    assert pair.blocks[-1] == Block(CartanFamily.B, 0)
    assert pair.p2 == P(2, 2, 1)
    # the larger distinguished block goes to p1
    pair = pair_from_blocks(
        [Block(CartanFamily.D, 2), Block(CartanFamily.D, 3)], D, 5
    )
    assert pair.p1 == P(5, 1)
    assert pair.p2 == P(3, 1)
    with pytest.raises(DualityConventionException):
        PseudoLeviPair(C, 3, P(4), P(3, 3))


def test_blocks_from_coroots():
    one, zero = Fraction(1), Fraction(0)
    vectors = [(one, -one, zero), (zero, zero, 2 * one)]
    assert blocks_from_coroots(vectors, 3, C) == [
        Block(CartanFamily.A, 2), Block(CartanFamily.C, 1)
    ]
    vectors = [(one, -one, zero, zero), (one, one, zero, zero)]
    assert blocks_from_coroots(vectors, 4, D) == [
        Block(CartanFamily.D, 2), Block(CartanFamily.A, 1),
        Block(CartanFamily.A, 1)
    ]
    with pytest.raises(DualityConventionException):
        blocks_from_coroots([(one, one, one)], 3, A)


def test_pseudo_levi_from_subsystem():
    rs = build(CartanFamily.C, 3)
    report = integral_subsystem(rs, rs.rho)
    pair = pseudo_levi_from_subsystem(report, rs)
    assert pair.ambient is B
    assert pair.blocks == (Block(CartanFamily.B, 3),)
    assert pair.p2 == P(7)
    assert d_som(pair) == zero_partition(C, 3)

    with pytest.raises(DualityConventionException):
        rs = build(CartanFamily.G, 2)
        pseudo_levi_from_subsystem(integral_subsystem(rs, rs.rho), rs)
