"""
Root data for the irreducible types and integral root subsystems
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import logging
import re
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx
from sympy import Matrix

from nilcover.definitions import CartanFamily
from nilcover.exceptions import (
    NotCartanMatrixException, UnsupportedGroupException
)
from nilcover.partitions import Partition, transpose


logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]

LABEL_RE = re.compile(r'^(\d*)(~?)([A-G])(\d+)$')


@dataclass(frozen=True, order=True)
class CartanLabel:
    family: CartanFamily
    rank: int
    # all roots of the component are short in a non simply-laced ambient
    short: bool = False

    def __str__(self) -> str:
        return '{}{}{}'.format(
            '~' if self.short else '', self.family.value, self.rank
        )

    @classmethod
    def parse(cls, value: str) -> 'CartanLabel':
        match = LABEL_RE.match(value.strip())
        if not match or match.group(1):
            raise UnsupportedGroupException({'label': value})
        return cls(
            CartanFamily(match.group(3)), int(match.group(4)),
            bool(match.group(2))
        )


def parse_subsystem_label(value: str) -> Counter:
    """
    Multiset of components of a label such as ``"2A2+~A1"`` or
    ``"(4A1)''"``. Primes and brackets are dropped, ``none`` is empty.
    """
    value = value.replace("'", '').replace('(', '').replace(')', '')
    value = value.replace(' ', '')
    components = Counter()  # type: Counter
    if value in ('', 'none'):
        return components
    for term in value.split('+'):
        match = LABEL_RE.match(term)
        if not match:
            raise UnsupportedGroupException({'label': value})
        count = int(match.group(1) or 1)
        label = CartanLabel(
            CartanFamily(match.group(3)), int(match.group(4)),
            bool(match.group(2))
        )
        components[label] += count
    return components


def format_subsystem_label(labels: Iterable[CartanLabel]) -> str:
    counts = Counter(labels)
    if not counts:
        return 'none'
    ordered = sorted(
        counts.items(),
        key=lambda item: (-item[0].rank, item[0].short, item[0].family.value)
    )
    return '+'.join(
        '{}{}'.format(count if count > 1 else '', label)
        for label, count in ordered
    )


def _vector(*values) -> Vector:
    return tuple(Fraction(x) for x in values)


def _unit(size: int, index: int, scale=1) -> List[Fraction]:
    vector = [Fraction(0)] * size
    vector[index] = Fraction(scale)
    return vector


def _difference(size: int, i: int, j: int) -> Vector:
    vector = _unit(size, i)
    vector[j] -= 1
    return tuple(vector)


def _classical_simples(family: CartanFamily, rank: int) -> List[Vector]:
    if family is CartanFamily.A:
        return [_difference(rank + 1, i, i + 1) for i in range(rank)]
    simples = [_difference(rank, i, i + 1) for i in range(rank - 1)]
    if family is CartanFamily.B:
        simples.append(tuple(_unit(rank, rank - 1)))
    elif family is CartanFamily.C:
        simples.append(tuple(_unit(rank, rank - 1, 2)))
    else:
        last = _unit(rank, rank - 1)
        last[rank - 2] = Fraction(1)
        simples.append(tuple(last))
    return simples


HALF = Fraction(1, 2)

E8_SIMPLES = [
    _vector(HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF),
    _vector(1, 1, 0, 0, 0, 0, 0, 0),
    _vector(-1, 1, 0, 0, 0, 0, 0, 0),
    _vector(0, -1, 1, 0, 0, 0, 0, 0),
    _vector(0, 0, -1, 1, 0, 0, 0, 0),
    _vector(0, 0, 0, -1, 1, 0, 0, 0),
    _vector(0, 0, 0, 0, -1, 1, 0, 0),
    _vector(0, 0, 0, 0, 0, -1, 1, 0),
]

EXCEPTIONAL_SIMPLES = {
    # Bourbaki numbering, alpha_1 short
    (CartanFamily.G, 2): [_vector(1, -1, 0), _vector(-2, 1, 1)],
    (CartanFamily.F, 4): [
        _vector(0, 1, -1, 0), _vector(0, 0, 1, -1), _vector(0, 0, 0, 1),
        _vector(HALF, -HALF, -HALF, -HALF)
    ],
    (CartanFamily.E, 6): E8_SIMPLES[:6],
    (CartanFamily.E, 7): E8_SIMPLES[:7],
    (CartanFamily.E, 8): E8_SIMPLES,
}  # type: Dict[Tuple[CartanFamily, int], List[Vector]]


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def _scale(vector: Sequence[Fraction], factor) -> Vector:
    return tuple(x * factor for x in vector)


def _add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def _positive_coefficients(cartan: List[List[int]]) -> List[Tuple[int, ...]]:
    """
    Positive roots in simple-root coordinates, generated height by height
    from root strings
    """
    rank = len(cartan)
    simples = [
        tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)
    ]
    known = set(simples)
    layer = list(simples)
    roots = list(simples)
    while layer:
        following = []
        for beta in layer:
            for i in range(rank):
                pairing = sum(beta[j] * cartan[j][i] for j in range(rank))
                down = 0
                lowered = list(beta)
                while True:
                    lowered[i] -= 1
                    if tuple(lowered) not in known:
                        break
                    down += 1
                if down - pairing > 0:
                    raised = list(beta)
                    raised[i] += 1
                    raised_root = tuple(raised)
                    if raised_root not in known:
                        known.add(raised_root)
                        following.append(raised_root)
        roots.extend(following)
        layer = following
    return roots


@dataclass(frozen=True)
class RootSystemData:
    """
    Roots, coroots and weights of an irreducible root system in a fixed
    ambient space. ``roots`` lists the positive roots first (ordered by
    height) followed by their negatives in the same order.
    """
    label: CartanLabel
    simple_roots: Tuple[Vector, ...]
    coefficients: Tuple[Tuple[int, ...], ...]
    roots: Tuple[Vector, ...]
    coroots: Tuple[Vector, ...]
    cartan: Tuple[Tuple[int, ...], ...]
    rho: Vector
    rho_check: Vector
    fundamental_weights: Tuple[Vector, ...]
    lengths: Tuple[Fraction, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def dimension(self) -> int:
        """Dimension of the ambient coordinate space"""
        return len(self.rho)

    @property
    def positive_count(self) -> int:
        return len(self.roots) // 2

    @property
    def simples(self) -> List[int]:
        return list(range(self.rank))

    @property
    def positive(self) -> range:
        return range(self.positive_count)

    @property
    def simply_laced(self) -> bool:
        return len(set(self.lengths)) <= 1

    def is_short(self, index: int) -> bool:
        return self.lengths[index] < max(self.lengths)

    def height(self, index: int) -> int:
        return abs(sum(self.coefficients[index]))

    def coroot_coefficients(self, index: int) -> Tuple[Fraction, ...]:
        """Coordinates of the coroot of ``roots[index]`` in simple coroots"""
        length = self.lengths[index]
        return tuple(
            c * dot(simple, simple) / length
            for c, simple in zip(self.coefficients[index], self.simple_roots)
        )

    def pairing(self, x: Sequence[Fraction], index: int) -> Fraction:
        """``<x, alpha^vee>`` for the root ``roots[index]``"""
        return 2 * dot(x, self.roots[index]) / self.lengths[index]

    def inner(self, i: int, j: int) -> Fraction:
        return dot(self.roots[i], self.roots[j])

    def highest_root(self) -> int:
        return max(self.positive, key=self.height)


@lru_cache(maxsize=None)
def build(family: CartanFamily, rank: int) -> RootSystemData:
    """
    Root datum of type ``family``/``rank``. Classical types use the usual
    coordinates (``A_r`` in dimension ``r + 1``), exceptional types their
    Bourbaki realisations.
    """
    family = CartanFamily(family)
    if family.is_classical:
        minimum = {
            CartanFamily.A: 0, CartanFamily.B: 1, CartanFamily.C: 1,
            CartanFamily.D: 2
        }[family]
        if rank < minimum:
            raise UnsupportedGroupException(
                {'family': family.value, 'rank': rank}
            )
        simples = _classical_simples(family, rank)
    elif (family, rank) in EXCEPTIONAL_SIMPLES:
        simples = EXCEPTIONAL_SIMPLES[(family, rank)]
    else:
        raise UnsupportedGroupException({'family': family.value, 'rank': rank})

    cartan = tuple(
        tuple(int(2 * dot(a, b) / dot(b, b)) for b in simples)
        for a in simples
    )
    positive = _positive_coefficients([list(row) for row in cartan])
    dimension = len(simples[0]) if simples else 1

    def combine(coefficients):
        vector = tuple([Fraction(0)] * dimension)
        for c, simple in zip(coefficients, simples):
            if c:
                vector = _add(vector, _scale(simple, c))
        return vector

    coefficients = positive + [tuple(-c for c in beta) for beta in positive]
    roots = tuple(combine(beta) for beta in coefficients)
    lengths = tuple(dot(beta, beta) for beta in roots)
    coroots = tuple(
        _scale(beta, Fraction(2) / length)
        for beta, length in zip(roots, lengths)
    )
    count = len(positive)
    zero = tuple([Fraction(0)] * dimension)
    rho = zero
    rho_check = zero
    for index in range(count):
        rho = _add(rho, _scale(roots[index], HALF))
        rho_check = _add(rho_check, _scale(coroots[index], HALF))

    weights = []
    if simples:
        inverse = Matrix([list(row) for row in cartan]).inv()
        for i in range(len(simples)):
            weight = zero
            for j, simple in enumerate(simples):
                entry = inverse[i, j]
                weight = _add(weight, _scale(
                    simple, Fraction(int(entry.p), int(entry.q))
                ))
            weights.append(weight)

    label = CartanLabel(family, rank)
    logger.debug('built %s with %d roots', label, len(roots))
    return RootSystemData(
        label=label,
        simple_roots=tuple(tuple(s) for s in simples),
        coefficients=tuple(coefficients),
        roots=roots,
        coroots=coroots,
        cartan=cartan,
        rho=rho,
        rho_check=rho_check,
        fundamental_weights=tuple(weights),
        lengths=lengths,
    )


def weyl_group_order(rs: RootSystemData) -> int:
    """
    Product of ``(m_i + 1)`` over the exponents, which are read off the
    height distribution of the positive roots
    """
    heights = Counter(rs.height(i) for i in rs.positive)
    if not heights:
        return 1
    layers = Partition(tuple(heights[h] for h in range(1, max(heights) + 1)))
    order = 1
    for exponent in transpose(layers).parts:
        order *= exponent + 1
    return order


def _check_cartan(matrix: Sequence[Sequence[int]]):
    size = len(matrix)
    if not size or any(len(row) != size for row in matrix):
        raise NotCartanMatrixException({'matrix': [list(r) for r in matrix]})
    for i in range(size):
        if matrix[i][i] != 2:
            raise NotCartanMatrixException(
                {'matrix': [list(r) for r in matrix]}
            )
        for j in range(size):
            if i == j:
                continue
            a, b = matrix[i][j], matrix[j][i]
            if a > 0 or (a == 0) != (b == 0) or a * b not in (0, 1, 2, 3):
                raise NotCartanMatrixException(
                    {'matrix': [list(r) for r in matrix]}
                )


def _diagram(matrix: Sequence[Sequence[int]]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(matrix)))
    for i in range(len(matrix)):
        for j in range(i + 1, len(matrix)):
            if matrix[i][j]:
                graph.add_edge(i, j, bond=matrix[i][j] * matrix[j][i])
    return graph


def classify_component(
    matrix: Sequence[Sequence[int]], short: bool = False
) -> CartanLabel:
    """
    Cartan type of an irreducible Cartan matrix, ``short`` marks a component
    made of short roots of the ambient system
    """
    _check_cartan(matrix)
    size = len(matrix)
    graph = _diagram(matrix)
    invalid = NotCartanMatrixException({'matrix': [list(r) for r in matrix]})
    if not nx.is_tree(graph):
        raise invalid

    bonds = Counter(bond for _, _, bond in graph.edges(data='bond'))
    degrees = dict(graph.degree())

    if bonds[3]:
        if size != 2:
            raise invalid
        return CartanLabel(CartanFamily.G, 2, short)

    if bonds[2]:
        if bonds[2] > 1 or max(degrees.values()) > 2:
            raise invalid
        if size == 2:
            return CartanLabel(CartanFamily.B, 2, short)
        i, j = next(
            (i, j) for i, j, bond in graph.edges(data='bond') if bond == 2
        )
        if degrees[i] == 2 and degrees[j] == 2:
            if size != 4:
                raise invalid
            return CartanLabel(CartanFamily.F, 4, short)
        end, inner = (i, j) if degrees[i] == 1 else (j, i)
        family = CartanFamily.B if matrix[inner][end] == -2 else CartanFamily.C
        return CartanLabel(family, size, short)

    branches = [node for node, degree in degrees.items() if degree >= 3]
    if not branches:
        return CartanLabel(CartanFamily.A, size, short)
    if len(branches) > 1 or degrees[branches[0]] != 3:
        raise invalid
    center = branches[0]
    graph.remove_node(center)
    arms = sorted(len(arm) for arm in nx.connected_components(graph))
    if arms[:2] == [1, 1]:
        return CartanLabel(CartanFamily.D, size, short)
    if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        return CartanLabel(CartanFamily.E, size, short)
    raise invalid


@dataclass(frozen=True)
class SubsystemReport:
    members: Tuple[int, ...]
    simples: Tuple[int, ...]
    components: Tuple[Tuple[CartanLabel, Tuple[int, ...]], ...]

    @property
    def labels(self) -> List[CartanLabel]:
        return [label for label, _ in self.components]

    @property
    def label(self) -> str:
        return format_subsystem_label(self.labels)

    def matches(self, label: str) -> bool:
        """Compares against a printed label, ignoring order and primes"""
        return Counter(self.labels) == parse_subsystem_label(label)


def integral_subsystem(
    rs: RootSystemData, nu: Sequence[Fraction]
) -> SubsystemReport:
    """
    Roots ``alpha`` with ``<nu, alpha^vee>`` integral, a simple system made
    of the indecomposable positive members and the Cartan type of every
    connected component
    """
    members = tuple(
        index for index in range(len(rs.roots))
        if rs.pairing(nu, index).denominator == 1
    )
    positive = [index for index in members if index < rs.positive_count]
    positive_set = {rs.coefficients[index] for index in positive}
    simples = []
    for index in positive:
        beta = rs.coefficients[index]
        decomposable = any(
            tuple(b - g for b, g in zip(beta, gamma)) in positive_set
            for gamma in positive_set if gamma != beta
        )
        if not decomposable:
            simples.append(index)

    graph = nx.Graph()
    graph.add_nodes_from(simples)
    for x, i in enumerate(simples):
        for j in simples[x + 1:]:
            if rs.inner(i, j):
                graph.add_edge(i, j)

    decorate = rs.label.family in (CartanFamily.F, CartanFamily.G)
    components = []
    for nodes in nx.connected_components(graph):
        nodes = sorted(nodes)
        matrix = [
            [int(2 * rs.inner(i, j) / rs.lengths[j]) for j in nodes]
            for i in nodes
        ]
        short = decorate and all(rs.is_short(i) for i in nodes)
        components.append((classify_component(matrix, short), tuple(nodes)))
    components.sort(key=lambda item: (-item[0].rank, item[1]))
    report = SubsystemReport(
        members=members, simples=tuple(simples), components=tuple(components)
    )
    logger.debug('integral subsystem of %s: %s', rs.label, report.label)
    return report
