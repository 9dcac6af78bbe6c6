"""
Exact partition arithmetic for classical nilpotent orbits
"""
from collections import Counter
from dataclasses import dataclass, field
from itertools import accumulate
import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from nilcover.definitions import ClassicalType
from nilcover.exceptions import (
    InvalidOrbitException, InvalidPartitionException, ParityMismatchException,
    PartNotFoundException
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """
    Weakly decreasing tuple of positive integers. Zero parts are never stored,
    use :meth:`from_parts` to build one from an unsorted iterable.
    """
    parts: Tuple[int, ...] = ()
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(
            not isinstance(x, int) or isinstance(x, bool) or x <= 0
            for x in parts
        ):
            raise InvalidPartitionException({'parts': list(parts)})
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartitionException({'parts': list(parts)})
        object.__setattr__(self, 'parts', parts)
        object.__setattr__(self, 'size', sum(parts))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> 'Partition':
        return cls(tuple(sorted((int(x) for x in parts if x), reverse=True)))

    @classmethod
    def from_string(cls, value: str) -> 'Partition':
        """Parses ``"3,3,1"``; an empty string is the empty partition"""
        value = value.strip().strip('()[]')
        if not value:
            return cls()
        try:
            return cls(tuple(int(x) for x in value.split(',')))
        except ValueError:
            raise InvalidPartitionException({'parts': value})

    @classmethod
    def power(cls, part: int, times: int, rest: int = 0) -> 'Partition':
        """``(part^times rest)``, where ``rest = 0`` is dropped"""
        return cls.from_parts([part] * times + [rest])

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return '(' + ','.join(str(x) for x in self.parts) + ')'


def multiplicities(p: Partition) -> List[Tuple[int, int]]:
    """Run-length view ``[(part, multiplicity), ...]`` in decreasing order"""
    counts = Counter(p.parts)
    return sorted(counts.items(), reverse=True)


def transpose(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(tuple(
        sum(1 for x in p.parts if x > i) for i in range(p.parts[0])
    ))


def union(p: Partition, q: Partition) -> Partition:
    return Partition.from_parts(p.parts + q.parts)


def prefix_sums(p: Partition, length: int) -> List[int]:
    padded = list(p.parts) + [0] * max(0, length - len(p))
    return list(accumulate(padded[:length]))


def dominates(p: Partition, q: Partition) -> bool:
    """
    Dominance order, partitions of different size are compared through their
    zero-padded partial sums
    """
    length = max(len(p), len(q))
    return all(
        a >= b for a, b in zip(prefix_sums(p, length), prefix_sums(q, length))
    )


def plus_box(p: Partition) -> Partition:
    """Adds one box to the largest part"""
    if not p.parts:
        return Partition((1,))
    return Partition((p.parts[0] + 1,) + p.parts[1:])


def minus_box(p: Partition) -> Partition:
    """Removes one box from the smallest part"""
    if not p.parts:
        raise InvalidPartitionException({'parts': [], 'reason': 'empty'})
    return Partition.from_parts(p.parts[:-1] + (p.parts[-1] - 1,))


def _bad_parts(parts: Sequence[int], t: ClassicalType) -> List[int]:
    if t is ClassicalType.A:
        return []
    # B and D constrain even parts, C constrains odd parts
    parity = 1 if t is ClassicalType.C else 0
    counts = Counter(parts)
    return [x for x, d in counts.items() if x % 2 == parity and d % 2]


def _satisfies_parity(p: Partition, t: ClassicalType) -> bool:
    return not _bad_parts(p.parts, t)


def is_valid(
    p: Partition, t: ClassicalType, ambient_size: Optional[int] = None
) -> bool:
    if ambient_size is not None and p.size != ambient_size:
        return False
    if t is ClassicalType.B and p.size % 2 == 0:
        return False
    if t in (ClassicalType.C, ClassicalType.D) and p.size % 2:
        return False
    return _satisfies_parity(p, t)


def check_parity(p: Partition, t: ClassicalType):
    if t is ClassicalType.B and p.size % 2 == 0:
        raise ParityMismatchException({'partition': list(p), 'type': t.value})
    if t in (ClassicalType.C, ClassicalType.D) and p.size % 2:
        raise ParityMismatchException({'partition': list(p), 'type': t.value})


def collapse(p: Partition, t: ClassicalType) -> Partition:
    """
    Largest partition of type ``t`` dominated by ``p``. Repeatedly takes the
    largest bad part q, lowers its last occurrence to q - 1 and raises the
    first later part smaller than q - 1.
    """
    check_parity(p, t)
    parts = list(p.parts)
    bad = _bad_parts(parts, t)
    while bad:
        q = max(bad)
        last = len(parts) - 1 - parts[::-1].index(q)
        parts[last] = q - 1
        for j in range(last + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = [x for x in parts if x]
        bad = _bad_parts(parts, t)
    return Partition(tuple(parts))


def _dominating(
    size: int, bounds: List[int], prefix: List[int], total: int, cap: int
) -> Iterator[List[int]]:
    if total == size:
        yield prefix
        return
    position = len(prefix)
    bound = bounds[position] if position < len(bounds) else size
    for x in range(min(cap, size - total), 0, -1):
        if total + x < bound:
            break
        yield from _dominating(size, bounds, prefix + [x], total + x, x)


def dominating_partitions(p: Partition) -> Iterator[Partition]:
    """Every partition of the same size dominating ``p``"""
    bounds = prefix_sums(p, len(p))
    for parts in _dominating(p.size, bounds, [], 0, p.size):
        yield Partition(tuple(parts))


def expansion(p: Partition, t: ClassicalType) -> Partition:
    """
    Smallest partition of type ``t`` dominating ``p``.

    The dominance-minimal valid partitions above ``p`` need not be unique
    (type C, ``(3,2,1)`` lies below both ``(3,3)`` and ``(4,1,1)``); the
    lexicographically smallest minimum is returned then. Raises
    ``InvalidOrbitException`` when no partition of type ``t`` dominates ``p``.
    """
    check_parity(p, t)
    if _satisfies_parity(p, t):
        return p
    candidates = [
        q for q in dominating_partitions(p) if _satisfies_parity(q, t)
    ]
    minima = [
        q for q in candidates
        if not any(c != q and dominates(q, c) for c in candidates)
    ]
    if not minima:
        # only the one-row partition of type D has nothing valid above it
        raise InvalidOrbitException({'partition': list(p), 'type': t.value})
    minima.sort()
    if len(minima) > 1:
        logger.debug(
            'expansion of %s in type %s is not unique: %s',
            p, t.value, ', '.join(str(q) for q in minima)
        )
    return minima[0]


def _check_part(p: Partition, part: int):
    if part not in p.parts:
        raise PartNotFoundException({'partition': list(p), 'part': part})


def frak_a(p: Partition, part: int) -> int:
    """
    Sum of multiplicities of the parts larger than ``part`` whose difference
    with it is odd
    """
    _check_part(p, part)
    return sum(
        d for x, d in multiplicities(p) if x > part and (x - part + 1) % 2 == 0
    )


def frak_b(p: Partition, part: int) -> int:
    """Same as :func:`frak_a` over the parts smaller than ``part``"""
    _check_part(p, part)
    return sum(
        d for x, d in multiplicities(p) if x < part and (x - part + 1) % 2 == 0
    )


def is_special(p: Partition, t: ClassicalType) -> bool:
    if t is ClassicalType.A:
        return True
    dual = ClassicalType.B if t is ClassicalType.B else ClassicalType.C
    return _satisfies_parity(transpose(p), dual)


def regular_partition(t: ClassicalType, rank: int) -> Partition:
    if t is ClassicalType.D:
        return Partition.from_parts((2 * rank - 1, 1))
    return Partition.from_parts((t.partition_size(rank),))


def zero_partition(t: ClassicalType, rank: int) -> Partition:
    return Partition((1,) * t.partition_size(rank))


def _partitions(size: int, cap: int) -> Iterator[Tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    for x in range(min(size, cap), 0, -1):
        for rest in _partitions(size - x, x):
            yield (x,) + rest


def all_partitions(size: int) -> Iterator[Partition]:
    """Partitions of ``size`` in decreasing lexicographic order"""
    for parts in _partitions(size, size):
        yield Partition(parts)


def valid_partitions(size: int, t: ClassicalType) -> Iterator[Partition]:
    return (p for p in all_partitions(size) if is_valid(p, t, size))
