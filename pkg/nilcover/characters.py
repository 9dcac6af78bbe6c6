"""
Characters of symmetric groups and the leading coefficient of GL theta
representations.

Class functions on S_r are indexed by cycle types. The permutation
character of the Weyl group on ``Y / Y_{Q,n}`` is computed on the image of
``y -> (B_Q(y, e_k) mod n)_k``, where permutations act by permuting
coordinates and the twisted action is ``z -> w(z - d) + d``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
import logging
from typing import Dict, Iterator, List, Tuple

import numpy as np

from nilcover.cover import CoverSpec, bilinear_form, n_alpha
from nilcover.definitions import MAX_QUOTIENT_SIZE
from nilcover.exceptions import (
    CoefficientMismatchException, QuotientTooLargeException,
    UnsupportedGroupException
)
from nilcover.partitions import (
    Partition, all_partitions, dominates, multiplicities, transpose
)


logger = logging.getLogger(__name__)


def cycle_types(r: int) -> List[Partition]:
    return list(all_partitions(r))


def centralizer_order(c: Partition) -> int:
    """``z_c``, the order of the centralizer of a permutation of type ``c``"""
    z = 1
    for part, d in multiplicities(c):
        z *= part ** d * factorial(d)
    return z


def class_size(c: Partition) -> int:
    return factorial(c.size) // centralizer_order(c)


def sign_of(c: Partition) -> int:
    return -1 if (c.size - len(c)) % 2 else 1


@dataclass
class ClassFunction:
    r: int
    values: Dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        missing = [c for c in cycle_types(self.r) if c not in self.values]
        assert not missing, 'class function undefined on {}'.format(
            ', '.join(str(c) for c in missing)
        )

    def __call__(self, c: Partition) -> Fraction:
        return self.values[c]

    def __mul__(self, other: 'ClassFunction') -> 'ClassFunction':
        return ClassFunction(
            self.r, {c: v * other.values[c] for c, v in self.values.items()}
        )

    def __sub__(self, other: 'ClassFunction') -> 'ClassFunction':
        return ClassFunction(
            self.r, {c: v - other.values[c] for c, v in self.values.items()}
        )

    @property
    def degree(self) -> Fraction:
        return self.values[Partition((1,) * self.r)]


def trivial_character(r: int) -> ClassFunction:
    return ClassFunction(r, {c: Fraction(1) for c in cycle_types(r)})


def sign_character(r: int) -> ClassFunction:
    return ClassFunction(r, {c: Fraction(sign_of(c)) for c in cycle_types(r)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """``<f, g>_{S_r}`` for real valued class functions"""
    assert f.r == g.r, 'class functions on different groups'
    return sum(
        (f(c) * g(c) / centralizer_order(c) for c in cycle_types(f.r)),
        Fraction(0)
    )


def _beta_set(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(parts)
    return tuple(x + length - 1 - i for i, x in enumerate(parts))


@lru_cache(maxsize=None)
def _mn_value(beta: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion on beta-numbers"""
    if not cycles:
        return 1
    k, rest = cycles[0], cycles[1:]
    present = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in present:
            continue
        # leg length of the rim hook
        height = sum(1 for x in beta if target < x < b)
        moved = tuple(sorted(
            (target if x == b else x for x in beta), reverse=True
        ))
        sign = -1 if height % 2 else 1
        total += sign * _mn_value(moved, rest)
    return total


def mn_character(shape: Partition) -> ClassFunction:
    """Irreducible character ``chi^shape`` of S_{|shape|}"""
    beta = _beta_set(shape.parts)
    return ClassFunction(shape.size, {
        c: Fraction(_mn_value(beta, c.parts)) for c in cycle_types(shape.size)
    })


def _young_classes(
    shape: Partition
) -> Iterator[Tuple[Partition, Fraction, int]]:
    """
    Classes of the Young subgroup ``S_shape``: merged cycle type, ``1/z``
    inside the subgroup and sign
    """
    for tuple_ in product(*(cycle_types(x) for x in shape.parts)):
        weight = Fraction(1)
        sign = 1
        merged = []  # type: List[int]
        for rho in tuple_:
            weight /= centralizer_order(rho)
            sign *= sign_of(rho)
            merged.extend(rho.parts)
        yield Partition.from_parts(merged), weight, sign


def induce_sign_from_young(shape: Partition) -> ClassFunction:
    """``Ind_{S_shape}^{S_r} sign``"""
    values = {c: Fraction(0) for c in cycle_types(shape.size)}
    for c, weight, sign in _young_classes(shape):
        values[c] += sign * weight
    return ClassFunction(shape.size, {
        c: v * centralizer_order(c) for c, v in values.items()
    })


def restrict_inner_product(shape: Partition, f: ClassFunction) -> Fraction:
    """``<sign, Res f>`` over the Young subgroup ``S_shape``"""
    return sum(
        (sign * weight * f(c) for c, weight, sign in _young_classes(shape)),
        Fraction(0)
    )


def decompose(f: ClassFunction) -> Dict[Partition, Fraction]:
    """Multiplicities of the irreducible characters, zeros dropped"""
    result = {}
    for shape in cycle_types(f.r):
        value = inner_product(f, mn_character(shape))
        if value:
            result[shape] = value
    return result


def j_induce_sign(shape: Partition) -> ClassFunction:
    """
    Truncated induction of the sign of ``S_shape``: ``chi^{shape^T}``, the
    constituent of the induced sign character of smallest shape
    """
    leading = transpose(shape)
    constituents = decompose(induce_sign_from_young(shape))
    assert constituents.get(leading) == 1, 'leading constituent is not simple'
    assert all(
        dominates(transpose(other), shape) for other in constituents
    ), 'induced sign has a constituent below the leading one'
    return mn_character(leading)


def _form_vector(spec: CoverSpec, index: int) -> List[Fraction]:
    return [Fraction(int(i == index)) for i in range(spec.rank)]


@dataclass
class QuotientActionSpace:
    """
    ``Y / Y_{Q,n}`` for a GL_r cover, realized as the image of
    ``y -> (B_Q(y, e_k) mod n)_k`` inside ``(Z/n)^r``
    """
    r: int
    form: Tuple[int, int]
    n: int
    elements: np.ndarray
    shift: np.ndarray
    _index: Dict[Tuple[int, ...], int] = field(default_factory=dict,
                                               repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def contains(self, z: np.ndarray) -> bool:
        if not self._index:
            self._index.update(
                (tuple(int(x) for x in row), i)
                for i, row in enumerate(self.elements)
            )
        return tuple(int(x) for x in np.mod(z, self.n)) in self._index

    def act(self, permutation: np.ndarray, z: np.ndarray) -> np.ndarray:
        """Twisted action of a permutation, ``w(e_k) = e_{permutation[k]}``"""
        moved = np.empty_like(z)
        moved[..., permutation] = z - self.shift
        return np.mod(moved + self.shift, self.n)

    def fixed_points(self, c: Partition) -> int:
        diff = np.mod(self.elements - self.shift, self.n)
        fixed = np.ones(len(diff), dtype=bool)
        start = 0
        for length in c.parts:
            block = diff[:, start:start + length]
            fixed &= np.all(block == block[:, :1], axis=1)
            start += length
        return int(fixed.sum())


def _generators(spec: CoverSpec) -> np.ndarray:
    r = spec.rank
    rows = []
    for j in range(r):
        y = _form_vector(spec, j)
        rows.append([
            int(bilinear_form(spec, y, _form_vector(spec, k)))
            for k in range(r)
        ])
    return np.mod(np.array(rows, dtype=np.int64), spec.n)


def quotient_space(spec: CoverSpec) -> QuotientActionSpace:
    if not spec.is_gl:
        raise UnsupportedGroupException({'group': spec.name})
    r, n = spec.rank, spec.n
    generators = _generators(spec)
    elements = np.zeros((1, r), dtype=np.int64)
    while True:
        grown = np.mod(
            elements[:, None, :] + generators[None, :, :], n
        ).reshape(-1, r)
        grown = np.unique(np.vstack([elements, grown]), axis=0)
        if len(grown) > MAX_QUOTIENT_SIZE:
            raise QuotientTooLargeException(
                {'group': spec.name, 'n': n, 'bound': MAX_QUOTIENT_SIZE}
            )
        if len(grown) == len(elements):
            break
        elements = grown
    delta = np.arange(r - 1, -1, -1, dtype=np.int64)
    shift = np.mod(delta @ generators, n)
    space = QuotientActionSpace(r, tuple(spec.gl_form), n, elements, shift)
    _check_stable(space)
    logger.debug('Y/Y_(Q,n) for %s^(%d) has %d elements', spec.name, n,
                  space.size)
    return space


def _check_stable(space: QuotientActionSpace):
    """The twisted action of generators of S_r maps the set to itself"""
    r = space.r
    if r < 2:
        return
    swap = np.arange(r)
    swap[[0, 1]] = swap[[1, 0]]
    cycle = np.roll(np.arange(r), 1)
    for permutation in (swap, cycle):
        for z in space.elements:
            assert space.contains(space.act(permutation, z)), \
                'twisted action leaves Y/Y_(Q,n)'


def sigma_x_character(space: QuotientActionSpace) -> ClassFunction:
    return ClassFunction(space.r, {
        c: Fraction(space.fixed_points(c)) for c in cycle_types(space.r)
    })


def burnside_orbit_count(space: QuotientActionSpace) -> int:
    """Orbits of the twisted action, counted by explicit enumeration"""
    r = space.r
    if r < 2:
        return space.size
    swap = np.arange(r)
    swap[[0, 1]] = swap[[1, 0]]
    cycle = np.roll(np.arange(r), 1)
    seen = set()  # type: set
    orbits = 0
    for z in space.elements:
        key = tuple(int(x) for x in z)
        if key in seen:
            continue
        orbits += 1
        stack = [z]
        seen.add(key)
        while stack:
            current = stack.pop()
            for permutation in (swap, cycle):
                image = space.act(permutation, current)
                image_key = tuple(int(x) for x in image)
                if image_key not in seen:
                    seen.add(image_key)
                    stack.append(image)
    return orbits


def dim_wh(shape: Partition, space: QuotientActionSpace) -> Fraction:
    """``<sign, sigma^X>`` over the Young subgroup ``S_shape``"""
    return restrict_inner_product(shape, sigma_x_character(space))


@dataclass
class CoefficientAudit:
    r: int
    n: int
    n_alpha: int
    shape: Partition
    lhs: Fraction
    rhs: Fraction
    dim_table: Dict[Partition, Fraction] = field(default_factory=dict)

    @property
    def value(self) -> int:
        return int(self.lhs)


def c_coefficient(
    spec: CoverSpec, with_table: bool = False
) -> CoefficientAudit:
    """
    Leading coefficient of the theta representation of a GL_r cover. The
    restricted inner product over ``S_lambda``, ``lambda = (n_alpha^a b)``,
    must equal ``<chi^lambda, sign x sigma^X>``.
    """
    if not spec.is_gl:
        raise UnsupportedGroupException({'group': spec.name})
    r = spec.rank
    na = n_alpha(spec, 0) if r > 1 else spec.n
    a, b = divmod(r, na)
    shape = Partition.power(na, a, b)
    space = quotient_space(spec)
    sigma = sigma_x_character(space)
    lhs = restrict_inner_product(shape, sigma)
    rhs = inner_product(
        j_induce_sign(transpose(shape)), sign_character(r) * sigma
    )
    if lhs != rhs or lhs.denominator != 1:
        raise CoefficientMismatchException({
            'group': spec.name, 'n': spec.n, 'lhs': str(lhs), 'rhs': str(rhs)
        })
    table = {}  # type: Dict[Partition, Fraction]
    if with_table:
        table = {mu: dim_wh(mu, space) for mu in cycle_types(r)}
    return CoefficientAudit(r, spec.n, na, shape, lhs, rhs, table)
