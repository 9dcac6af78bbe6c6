"""
Duality maps on classical nilpotent orbits.

``d_som`` takes a pseudo-Levi subsystem of the dual group, given as
coordinate blocks, to an orbit of the group itself:

* dual of type C (group of type B): ``(p1 u (p2+)_B)^T_B``
* dual of type B (group of type C): ``(p1 u (p2-)_C)^T_C``
* dual of type D: ``(p1 u ((p2^T)_D)^T)^T_D``
* dual of type A: ``(p1 u p2)^T``

where ``p1`` is the regular partition of the distinguished non-A block and
``p2`` collects the regular partitions of every other block.
"""
from collections import defaultdict
from dataclasses import dataclass
import logging
from typing import Dict, List, Sequence, Set, Tuple

import networkx as nx

from nilcover.definitions import CartanFamily, ClassicalType
from nilcover.exceptions import (
    DualityConventionException, InvalidOrbitException
)
from nilcover.partitions import (
    Partition, collapse, is_valid, minus_box, plus_box, transpose, union
)
from nilcover.roots import (
    CartanLabel, RootSystemData, SubsystemReport, Vector
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Block:
    """
    Coordinates spanned by one simple factor of a pseudo-Levi. ``kind`` is
    ``A`` for a GL_size factor, otherwise the Cartan type of the factor.
    """
    kind: CartanFamily
    size: int

    def __str__(self) -> str:
        if self.kind is CartanFamily.A:
            return 'GL{}'.format(self.size)
        return '{}{}'.format(self.kind.value, self.size)


def regular_contribution(block: Block, ambient: ClassicalType) -> Partition:
    k = block.size
    if block.kind is CartanFamily.A:
        parts = (k,) if ambient is ClassicalType.A else (k, k)
        return Partition.from_parts(parts)
    if block.kind is CartanFamily.B:
        return Partition((2 * k + 1,))
    if block.kind is CartanFamily.C:
        return Partition((2 * k,))
    if block.kind is CartanFamily.D:
        return Partition.from_parts((2 * k - 1, 1))
    raise DualityConventionException({'block': str(block)})


@dataclass(frozen=True)
class PseudoLeviPair:
    ambient: ClassicalType
    rank: int
    p1: Partition
    p2: Partition
    blocks: Tuple[Block, ...] = ()

    def __post_init__(self):
        expected = self.ambient.partition_size(self.rank)
        if self.p1.size + self.p2.size != expected:
            raise DualityConventionException({
                'p1': list(self.p1), 'p2': list(self.p2), 'size': expected
            })


def d_ls(p: Partition, t: ClassicalType) -> Partition:
    if not is_valid(p, t):
        raise InvalidOrbitException({'partition': list(p), 'type': t.value})
    if t is ClassicalType.A:
        return transpose(p)
    return collapse(transpose(p), t)


def d_bv(p: Partition, source: ClassicalType) -> Partition:
    """
    Barbasch-Vogan duality into the Langlands dual type, the value of
    :func:`d_som` on a pair with empty ``p1``
    """
    if not is_valid(p, source):
        raise InvalidOrbitException(
            {'partition': list(p), 'type': source.value}
        )
    rank = p.size // 2 if source is not ClassicalType.A else p.size
    return d_som(PseudoLeviPair(source, rank, Partition(), p))


def d_som(pair: PseudoLeviPair) -> Partition:
    p1, p2 = pair.p1, pair.p2
    ambient = pair.ambient
    if ambient is ClassicalType.A:
        result = transpose(union(p1, p2))
    elif ambient is ClassicalType.C:
        inner = collapse(plus_box(p2), ClassicalType.B)
        logger.debug('d_som C: (p2+)_B = %s', inner)
        result = collapse(transpose(union(p1, inner)), ClassicalType.B)
    elif ambient is ClassicalType.B:
        inner = collapse(minus_box(p2), ClassicalType.C)
        logger.debug('d_som B: (p2-)_C = %s', inner)
        result = collapse(transpose(union(p1, inner)), ClassicalType.C)
    else:
        inner = transpose(collapse(transpose(p2), ClassicalType.D))
        logger.debug('d_som D: ((p2^T)_D)^T = %s', inner)
        result = collapse(transpose(union(p1, inner)), ClassicalType.D)
    target = ambient.dual
    size = target.partition_size(pair.rank)
    if not is_valid(result, target, size):
        raise DualityConventionException({
            'p1': list(p1), 'p2': list(p2), 'result': list(result),
            'type': target.value
        })
    logger.debug('d_som(%s, %s) in %s%d = %s', p1, p2, ambient.value,
                 pair.rank, result)
    return result


def _distinguished(blocks: List[Block], ambient: ClassicalType) -> int:
    """Index of the block realized in p1, or -1"""
    kind = {
        ClassicalType.B: CartanFamily.D,
        ClassicalType.C: CartanFamily.C,
        ClassicalType.D: CartanFamily.D,
    }.get(ambient)
    candidates = [
        (block.size, -index) for index, block in enumerate(blocks)
        if block.kind is kind
    ]
    if not candidates:
        return -1
    return -max(candidates)[1]


def pair_from_blocks(
    blocks: Sequence[Block], ambient: ClassicalType, rank: int
) -> PseudoLeviPair:
    blocks = list(blocks)
    if ambient is ClassicalType.B and not any(
        block.kind is CartanFamily.B for block in blocks
    ):
        blocks.append(Block(CartanFamily.B, 0))
    chosen = _distinguished(blocks, ambient)
    p1 = Partition()
    p2 = Partition()
    for index, block in enumerate(blocks):
        contribution = regular_contribution(block, ambient)
        if index == chosen:
            p1 = contribution
        else:
            p2 = union(p2, contribution)
    return PseudoLeviPair(ambient, rank, p1, p2, tuple(blocks))


def blocks_from_coroots(
    vectors: Sequence[Vector], dimension: int, ambient: ClassicalType
) -> List[Block]:
    """
    Coordinate blocks of a subsystem given by its (co)root vectors. Blocks
    holding a single-coordinate root have the ambient type, blocks holding
    both ``e_i - e_j`` and ``e_i + e_j`` are of type D, all others are GL.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(dimension))
    single = set()  # type: Set[int]
    signs = defaultdict(set)  # type: Dict[Tuple[int, int], Set[int]]
    for vector in vectors:
        support = [i for i, x in enumerate(vector) if x]
        if len(support) == 1:
            single.add(support[0])
        elif len(support) == 2:
            i, j = support
            graph.add_edge(i, j)
            signs[(i, j)].add(1 if vector[i] * vector[j] > 0 else -1)
        else:
            raise DualityConventionException(
                {'vector': [str(x) for x in vector]}
            )
    both = {key for key, value in signs.items() if len(value) == 2}
    blocks = []
    for nodes in sorted(nx.connected_components(graph), key=min):
        if ambient is not ClassicalType.A and nodes & single:
            kind = CartanFamily(ambient.value)
        elif any(i in nodes for i, _ in both):
            kind = CartanFamily.D
        else:
            kind = CartanFamily.A
        blocks.append(Block(kind, len(nodes)))
    logger.debug('blocks in %s: %s', ambient.value,
                 ', '.join(str(block) for block in blocks))
    return blocks


def pseudo_levi_from_subsystem(
    report: SubsystemReport, rs: RootSystemData
) -> PseudoLeviPair:
    """
    Pseudo-Levi of the dual group spanned by the coroots of an integral
    subsystem of the classical root system ``rs``
    """
    family = rs.label.family
    if not family.is_classical:
        raise DualityConventionException({'group': str(rs.label)})
    ambient = ClassicalType(family.value).dual
    vectors = [rs.coroots[index] for index in report.members]
    rank = rs.dimension if ambient is ClassicalType.A else rs.rank
    blocks = blocks_from_coroots(vectors, rs.dimension, ambient)
    return pair_from_blocks(blocks, ambient, rank)


def pseudo_levi_from_components(
    components: Sequence[CartanLabel], ambient: ClassicalType, rank: int
) -> PseudoLeviPair:
    """
    Label-only variant: every component is taken at its Cartan type, so a
    D2 or D3 factor must be passed as such and not as A1+A1 or A3.
    Coordinates left uncovered become GL1 factors.
    """
    blocks = []
    for label in components:
        if label.family is CartanFamily.A:
            blocks.append(Block(CartanFamily.A, label.rank + 1))
        elif label.family in (CartanFamily.B, CartanFamily.C, CartanFamily.D):
            blocks.append(Block(label.family, label.rank))
        else:
            raise DualityConventionException({'component': str(label)})
    covered = sum(block.size for block in blocks)
    if covered > rank:
        raise DualityConventionException(
            {'components': [str(x) for x in components], 'rank': rank}
        )
    blocks.extend(Block(CartanFamily.A, 1) for _ in range(rank - covered))
    return pair_from_blocks(blocks, ambient, rank)
