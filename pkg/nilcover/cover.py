"""
Covers described by their quadratic form: Q on coroots, n_alpha, the
saturation ñ_alpha, the lattice Y_{Q,n} and exceptional characters
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
import logging
from typing import List, Optional, Sequence, Tuple

from nilcover.definitions import (
    CartanFamily, ClassicalType, DEFAULT_GL_FORM, IsogenyForm
)
from nilcover.exceptions import (
    LatticeEmbeddingException, UnsupportedGroupException
)
from nilcover.roots import RootSystemData, Vector, build, dot


logger = logging.getLogger(__name__)


ALLOWED_FORMS = {
    CartanFamily.A: (IsogenyForm.GL, IsogenyForm.SC),
    CartanFamily.B: (IsogenyForm.SO, IsogenyForm.SC),
    CartanFamily.C: (IsogenyForm.SP, IsogenyForm.SC),
    CartanFamily.D: (IsogenyForm.SO, IsogenyForm.SC),
}

GROUP_ALIASES = {
    'GL': (CartanFamily.A, IsogenyForm.GL),
    'SL': (CartanFamily.A, IsogenyForm.SC),
    'Sp': (CartanFamily.C, IsogenyForm.SP),
    'SO2r+1': (CartanFamily.B, IsogenyForm.SO),
    'SO2r': (CartanFamily.D, IsogenyForm.SO),
    'Spin2r+1': (CartanFamily.B, IsogenyForm.SC),
    'Spin2r': (CartanFamily.D, IsogenyForm.SC),
}

UNSATURATED_FAMILIES = (CartanFamily.B, CartanFamily.D)

EXCEPTIONAL_GROUPS = {
    'G2': (CartanFamily.G, 2),
    'F4': (CartanFamily.F, 4),
    'E6': (CartanFamily.E, 6),
    'E7': (CartanFamily.E, 7),
    'E8': (CartanFamily.E, 8),
}


@dataclass(frozen=True)
class CoverSpec:
    """
    n-fold cover of a split group.

    :params family: Cartan family of the group
    :params rank: ``r`` of GL_r, SO_{2r+1}, Sp_{2r}, SO_{2r} or the rank of an
                  exceptional group
    :params inv_bd: Q evaluated at a short coroot, ignored for GL forms
    :params gl_form: ``(a, b)`` with ``Q(y) = a sum y_i^2 + b sum_{i<j}
                     y_i y_j``, GL forms only
    :params persistent: explicit persistence flag, derived when ``None``
    """
    family: CartanFamily
    rank: int
    n: int
    form: IsogenyForm = IsogenyForm.SC
    inv_bd: int = 1
    gl_form: Tuple[int, int] = DEFAULT_GL_FORM
    persistent: Optional[bool] = None

    def __post_init__(self):
        object.__setattr__(self, 'family', CartanFamily(self.family))
        object.__setattr__(self, 'form', IsogenyForm(self.form))
        object.__setattr__(self, 'gl_form', tuple(self.gl_form))
        payload = {
            'family': self.family.value, 'rank': self.rank, 'n': self.n,
            'form': self.form.value
        }
        if self.n < 1 or self.rank < 1:
            raise UnsupportedGroupException(payload)
        if self.family.is_classical:
            if self.form not in ALLOWED_FORMS[self.family]:
                raise UnsupportedGroupException(payload)
        elif (
            self.form is not IsogenyForm.SC
            or (self.family.value + str(self.rank)) not in EXCEPTIONAL_GROUPS
        ):
            raise UnsupportedGroupException(payload)

    @property
    def name(self) -> str:
        r = self.rank
        if not self.family.is_classical:
            return '{}{}'.format(self.family.value, r)
        if self.family is CartanFamily.A:
            return '{}_{}'.format(
                'GL' if self.form is IsogenyForm.GL else 'SL', r
            )
        if self.family is CartanFamily.C:
            return 'Sp_{}'.format(2 * r)
        size = 2 * r + 1 if self.family is CartanFamily.B else 2 * r
        return '{}_{}'.format(
            'SO' if self.form is IsogenyForm.SO else 'Spin', size
        )

    @property
    def classical_type(self) -> ClassicalType:
        if not self.family.is_classical:
            raise UnsupportedGroupException({'group': self.name})
        return ClassicalType(self.family.value)

    @property
    def root_system(self) -> RootSystemData:
        if self.family is CartanFamily.A:
            return build(CartanFamily.A, self.rank - 1)
        return build(self.family, self.rank)

    @property
    def is_gl(self) -> bool:
        return self.form is IsogenyForm.GL

    def with_degree(self, n: int) -> 'CoverSpec':
        return CoverSpec(
            self.family, self.rank, n, self.form, self.inv_bd, self.gl_form,
            self.persistent
        )


def parse_group(
    group: str, rank: Optional[int] = None, n: int = 1,
    inv_bd: Optional[int] = None,
    gl_form: Tuple[int, int] = DEFAULT_GL_FORM
) -> CoverSpec:
    """
    Builds a spec from a group name: ``GL``, ``SL``, ``Sp``, ``SO2r+1``,
    ``SO2r``, ``Spin2r+1``, ``Spin2r`` (these need ``rank``) or one of the
    exceptional names ``G2`` ... ``E8``
    """
    if group in EXCEPTIONAL_GROUPS:
        family, exceptional_rank = EXCEPTIONAL_GROUPS[group]
        if rank not in (None, exceptional_rank):
            raise UnsupportedGroupException({'group': group, 'rank': rank})
        return CoverSpec(
            family, exceptional_rank, n, IsogenyForm.SC,
            1 if inv_bd is None else inv_bd
        )
    if group not in GROUP_ALIASES or rank is None:
        raise UnsupportedGroupException({'group': group, 'rank': rank})
    family, form = GROUP_ALIASES[group]
    if inv_bd is None:
        # SO covers are restricted from SL, doubling the invariant
        inv_bd = 2 if form is IsogenyForm.SO else 1
    return CoverSpec(family, rank, n, form, inv_bd, gl_form)


@lru_cache(maxsize=None)
def _short_coroot_length(family: CartanFamily, rank: int) -> Fraction:
    # B_1 has no coroot e_i - e_j, Q stays normalized on that family length
    if family is CartanFamily.B:
        return Fraction(2)
    coroots = build(family, rank).coroots
    return min(dot(c, c) for c in coroots) if coroots else Fraction(2)


def bilinear_form(
    spec: CoverSpec, y: Sequence[Fraction], z: Sequence[Fraction]
) -> Fraction:
    """``B_Q(y, z) = Q(y + z) - Q(y) - Q(z)``"""
    if spec.is_gl:
        a, b = spec.gl_form
        total_y, total_z = sum(y), sum(z)
        diagonal = dot(y, z)
        return (2 * a - b) * diagonal + b * total_y * total_z
    label = spec.root_system.label
    length = _short_coroot_length(label.family, label.rank)
    return 2 * spec.inv_bd * dot(y, z) / length


def quadratic_form(spec: CoverSpec, y: Sequence[Fraction]) -> Fraction:
    return bilinear_form(spec, y, y) / 2


def q_value(spec: CoverSpec, index: int) -> int:
    """``Q(alpha^vee)`` for the root ``roots[index]``"""
    value = quadratic_form(spec, spec.root_system.coroots[index])
    assert value.denominator == 1, 'Q must be integral on coroots'
    return int(value)


def n_alpha(spec: CoverSpec, index: int) -> int:
    return spec.n // gcd(spec.n, q_value(spec, index))


def lattice_basis(spec: CoverSpec) -> List[Vector]:
    """Basis of the cocharacter lattice Y"""
    rs = spec.root_system
    if spec.form in (IsogenyForm.GL, IsogenyForm.SO):
        size = rs.dimension
        return [
            tuple(Fraction(int(i == k)) for i in range(size))
            for k in range(size)
        ]
    return [rs.coroots[i] for i in rs.simples]


def in_y(spec: CoverSpec, y: Sequence[Fraction]) -> bool:
    rs = spec.root_system
    if len(y) != rs.dimension:
        return False
    if spec.form in (IsogenyForm.GL, IsogenyForm.SO):
        return all(Fraction(x).denominator == 1 for x in y)
    coordinates = [dot(weight, y) for weight in rs.fundamental_weights]
    rebuilt = [Fraction(0)] * rs.dimension
    for c, i in zip(coordinates, rs.simples):
        rebuilt = [a + c * b for a, b in zip(rebuilt, rs.coroots[i])]
    return (
        rebuilt == [Fraction(x) for x in y]
        and all(c.denominator == 1 for c in coordinates)
    )


def in_y_qn(spec: CoverSpec, y: Sequence[Fraction]) -> bool:
    """``y`` lies in Y_{Q,n}: ``B_Q(y, e) = 0 mod n`` on a basis of Y"""
    for e in lattice_basis(spec):
        value = bilinear_form(spec, y, e)
        if value.denominator != 1 or value % spec.n:
            return False
    return True


def tilde_n_alpha(spec: CoverSpec, index: int) -> int:
    """Smallest ``t`` with ``t alpha^vee`` in Y_{Q,n}"""
    coroot = spec.root_system.coroots[index]
    for t in range(1, spec.n + 1):
        if in_y_qn(spec, [t * x for x in coroot]):
            return t
    return spec.n  # pragma: no cover


@dataclass(frozen=True)
class ExceptionalCharacter:
    nu: Vector
    denominators: Tuple[int, ...]


def _character_denominator(spec: CoverSpec, index: int) -> int:
    # B and D take n_alpha, their rank two lattices halve ñ on alpha_1
    if spec.family in UNSATURATED_FAMILIES:
        return n_alpha(spec, index)
    return tilde_n_alpha(spec, index)


@lru_cache(maxsize=None)
def exceptional_character(spec: CoverSpec) -> ExceptionalCharacter:
    """
    ``nu = sum omega_alpha / ñ_alpha`` over the simple roots, with
    ``n_alpha`` in place of ``ñ_alpha`` for the orthogonal families
    """
    rs = spec.root_system
    denominators = tuple(
        _character_denominator(spec, i) for i in rs.simples
    )
    nu = tuple([Fraction(0)] * rs.dimension)
    for weight, t in zip(rs.fundamental_weights, denominators):
        nu = tuple(a + b / t for a, b in zip(nu, weight))
    logger.debug('exceptional character of %s^(%d): %s', spec.name, spec.n,
                 denominators)
    return ExceptionalCharacter(nu=nu, denominators=denominators)


def degree_for_spin(spec: CoverSpec) -> int:
    """
    Degree of the Spin cover sharing the exceptional root subsystem of an SO
    cover, ``n / gcd(n, Q(alpha_1^vee))``
    """
    if spec.form is not IsogenyForm.SO:
        return spec.n
    return spec.n // gcd(spec.n, spec.inv_bd)


def is_persistent(spec: CoverSpec) -> bool:
    if spec.persistent is not None:
        return spec.persistent
    if spec.family is CartanFamily.C:
        return spec.n % 2 == 1 or spec.n % 4 == 0
    return True


def orthogonal_into_special_linear(
    rank: int, odd: bool = True
) -> List[List[int]]:
    """
    Cocharacter map of the diagonal torus of SO_{2r+1} (or SO_{2r}) into
    SL_{2r+1} (or SL_{2r}), one row per coordinate
    """
    size = 2 * rank + 1 if odd else 2 * rank
    rows = []
    for k in range(rank):
        row = [0] * size
        row[k] = 1
        row[size - 1 - k] = -1
        rows.append(row)
    return rows


def pullback_bd_invariant(
    spec: CoverSpec, embedding: Sequence[Sequence[int]],
    coroot: Sequence[int]
) -> int:
    """
    Brylinski-Deligne invariant of the cover restricted along ``embedding``.

    :params embedding: image in Y of every coordinate vector of the subgroup
    :params coroot: a short coroot of the subgroup in its coordinates
    """
    size = spec.root_system.dimension
    image = [Fraction(0)] * size
    for c, row in zip(coroot, embedding):
        if len(row) != size:
            raise LatticeEmbeddingException(
                {'row': list(row), 'dimension': size}
            )
        image = [a + c * b for a, b in zip(image, row)]
    if not in_y(spec, image):
        raise LatticeEmbeddingException({'image': [str(x) for x in image]})
    value = quadratic_form(spec, image)
    return int(value)
