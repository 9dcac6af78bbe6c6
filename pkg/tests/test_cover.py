from fractions import Fraction

import pytest

from nilcover.cover import (
    CoverSpec, bilinear_form, degree_for_spin, exceptional_character,
    in_y, in_y_qn, is_persistent, lattice_basis, n_alpha,
    orthogonal_into_special_linear, parse_group, pullback_bd_invariant,
    q_value, quadratic_form, tilde_n_alpha
)
from nilcover.definitions import CartanFamily, ClassicalType, IsogenyForm
from nilcover.exceptions import (
    LatticeEmbeddingException, UnsupportedGroupException
)
from nilcover.roots import build, dot


@pytest.mark.parametrize('group,rank,name,inv_bd', [
    ('GL', 7, 'GL_7', 1),
    ('SL', 3, 'SL_3', 1),
    ('Sp', 3, 'Sp_6', 1),
    ('SO2r+1', 4, 'SO_9', 2),
    ('SO2r', 4, 'SO_8', 2),
    ('Spin2r+1', 3, 'Spin_7', 1),
    ('Spin2r', 4, 'Spin_8', 1),
    ('E8', None, 'E8', 1),
    ('G2', None, 'G2', 1),
])
def test_parse_group(group, rank, name, inv_bd):
    spec = parse_group(group, rank, n=3)
    assert spec.name == name
    assert spec.inv_bd == inv_bd
    assert spec.n == 3
    assert spec.with_degree(5).n == 5
    assert spec.with_degree(5).name == name


def test_parse_group_rejects():
    with pytest.raises(UnsupportedGroupException):
        parse_group('U', 3)
    with pytest.raises(UnsupportedGroupException):
        parse_group('Sp')
    with pytest.raises(UnsupportedGroupException):
        parse_group('E8', rank=7)
    with pytest.raises(UnsupportedGroupException):
        parse_group('Sp', 3, n=0)
    with pytest.raises(UnsupportedGroupException):
        CoverSpec(CartanFamily.C, 2, 1, IsogenyForm.SO)
    with pytest.raises(UnsupportedGroupException):
        CoverSpec(CartanFamily.E, 5, 1)


def test_classical_type():
    assert parse_group('Sp', 2).classical_type is ClassicalType.C
    assert parse_group('GL', 2).classical_type is ClassicalType.A
    with pytest.raises(UnsupportedGroupException):
        parse_group('F4').classical_type


def test_gl_form():
    spec = parse_group('GL', 3, n=2)
    e1 = [Fraction(1), Fraction(0), Fraction(0)]
    e2 = [Fraction(0), Fraction(1), Fraction(0)]
    assert bilinear_form(spec, e1, e1) == 0
    assert bilinear_form(spec, e1, e2) == 1
    assert q_value(spec, 0) == -1
    spec = parse_group('GL', 3, n=2, gl_form=(1, 1))
    assert bilinear_form(spec, e1, e1) == 2
    assert quadratic_form(spec, e1) == 1
    assert q_value(spec, 0) == 1


def test_symplectic_q_values():
    spec = parse_group('Sp', 3, n=4)
    rs = spec.root_system
    long_simple = rs.simples[-1]
    # short coroots sit under long roots
    assert q_value(spec, long_simple) == 1
    assert q_value(spec, 0) == 2
    assert n_alpha(spec, long_simple) == 4
    assert n_alpha(spec, 0) == 2


def test_lattice_membership():
    spin = parse_group('Spin2r+1', 3)
    assert not in_y(spin, [1, 0, 0])
    assert in_y(spin, [1, 1, 0])
    so = parse_group('SO2r+1', 3)
    assert in_y(so, [1, 0, 0])
    assert len(lattice_basis(so)) == 3
    assert not in_y(so, [Fraction(1, 2), 0, 0])
    assert not in_y(so, [1, 0])


def test_saturation():
    spec = parse_group('GL', 3, n=2)
    coroot = spec.root_system.coroots[0]
    assert not in_y_qn(spec, coroot)
    assert in_y_qn(spec, [2 * x for x in coroot])
    assert tilde_n_alpha(spec, 0) == 2
    assert tilde_n_alpha(spec.with_degree(1), 0) == 1


CLASSICAL_GROUPS = (
    ('GL', 2), ('SL', 2), ('Sp', 1), ('SO2r+1', 1), ('Spin2r+1', 1),
    ('SO2r', 2), ('Spin2r', 2),
)


def _classical_covers(max_rank, max_n):
    for group, low in CLASSICAL_GROUPS:
        for rank in range(low, max_rank + 1):
            for n in range(1, max_n + 1):
                yield parse_group(group, rank, n=n)


def test_saturation_halves_at_most():
    halved = set()
    for spec in _classical_covers(8, 12):
        for i in spec.root_system.simples:
            full, tilde = n_alpha(spec, i), tilde_n_alpha(spec, i)
            assert tilde in (full, full // 2), (spec.name, spec.n, i)
            if tilde != full:
                assert full % 2 == 0
                halved.add(spec.name)
    assert {'SL_2', 'Spin_5', 'Spin_4', 'Sp_4'} <= halved


def test_exceptional_character_pairing():
    for spec in _classical_covers(5, 8):
        rs = spec.root_system
        character = exceptional_character(spec)
        for i, d in zip(rs.simples, character.denominators):
            assert dot(character.nu, rs.coroots[i]) * d == 1
        full = [n_alpha(spec, i) for i in rs.simples]
        if full == [tilde_n_alpha(spec, i) for i in rs.simples]:
            nu = tuple(
                sum(w[k] / d for w, d in zip(rs.fundamental_weights, full))
                for k in range(rs.dimension)
            )
            assert character.nu == nu, (spec.name, spec.n)


@pytest.mark.parametrize('rank', [2, 3, 4, 5])
def test_orthogonal_exceptional_characters(rank):
    b_rho = build(CartanFamily.B, rank).rho
    d_rho = build(CartanFamily.D, rank).rho
    for n in range(1, 13):
        nu = exceptional_character(parse_group('Spin2r+1', rank, n=n)).nu
        if n % 2:
            assert nu == tuple(x / n for x in b_rho)
        else:
            # rho of C_r over n
            assert nu == tuple(Fraction(rank - i, n) for i in range(rank))
        nu = exceptional_character(parse_group('Spin2r', rank, n=n)).nu
        assert nu == tuple(x / n for x in d_rho)


def test_rank_two_orthogonal_characters():
    nu = exceptional_character(parse_group('Spin2r+1', 2, n=6)).nu
    assert nu == (Fraction(1, 3), Fraction(1, 6))
    nu = exceptional_character(parse_group('Spin2r', 2, n=2)).nu
    assert nu == (Fraction(1, 2), Fraction(0))
    # SO_3: the coroot 2e_1 is normalized as in the higher ranks
    spec = parse_group('SO2r+1', 1, n=4)
    assert q_value(spec, 0) == 4
    assert n_alpha(spec, 0) == 1


def test_persistence_and_spin_degree():
    assert not is_persistent(parse_group('Sp', 3, n=2))
    assert not is_persistent(parse_group('Sp', 3, n=6))
    assert is_persistent(parse_group('Sp', 3, n=4))
    assert is_persistent(parse_group('Sp', 3, n=3))
    assert is_persistent(parse_group('SO2r+1', 3, n=2))
    flagged = CoverSpec(CartanFamily.C, 3, 2, persistent=True)
    assert is_persistent(flagged)

    assert degree_for_spin(parse_group('SO2r+1', 4, n=6)) == 3
    assert degree_for_spin(parse_group('SO2r+1', 4, n=3)) == 3
    assert degree_for_spin(parse_group('Spin2r+1', 4, n=6)) == 6


@pytest.mark.parametrize('group,rank', [
    ('G2', None), ('F4', None), ('E6', None), ('Sp', 3), ('SO2r', 4),
])
def test_exceptional_character_at_degree_one(group, rank):
    spec = parse_group(group, rank, n=1)
    character = exceptional_character(spec)
    assert character.nu == spec.root_system.rho
    assert set(character.denominators) == {1}


def test_pullback_bd_invariant():
    sl = parse_group('SL', 5)
    embedding = orthogonal_into_special_linear(2)
    assert embedding == [[1, 0, 0, 0, -1], [0, 1, 0, -1, 0]]
    # a short coroot of SO_5 restricts to an invariant of 2
    assert pullback_bd_invariant(sl, embedding, [1, -1]) == 2
    with pytest.raises(LatticeEmbeddingException):
        pullback_bd_invariant(
            sl, orthogonal_into_special_linear(2, odd=False), [1, -1]
        )
