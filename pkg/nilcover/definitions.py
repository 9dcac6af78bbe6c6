"""
Type definitions and configuration shared across nilcover modules
"""
from enum import Enum
import os
from typing import Tuple


PACKAGE_DATA_PATH = os.path.join(os.path.dirname(__file__), 'data')
DATA_DIR_ENV = 'NILCOVER_DATA_DIR'

ORBITS_FILE = 'orbits.jsonl'
THETA_FILE = 'theta.jsonl'
SCHEMA_VERSION = 1

# Q(y) = a * sum(y_i^2) + b * sum_{i<j} y_i y_j, so Q(alpha^vee) = 2a - b = -1
DEFAULT_GL_FORM = (0, 1)  # type: Tuple[int, int]

MAX_QUOTIENT_SIZE = 10**6


def data_path() -> str:
    """
    Directory holding the curated tables, ``NILCOVER_DATA_DIR`` wins over the
    packaged copy
    """
    return os.environ.get(DATA_DIR_ENV) or PACKAGE_DATA_PATH


class CartanFamily(str, Enum):
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'
    E = 'E'
    F = 'F'
    G = 'G'

    @property
    def is_classical(self) -> bool:
        return self in CLASSICAL_FAMILIES


CLASSICAL_FAMILIES = frozenset(
    (CartanFamily.A, CartanFamily.B, CartanFamily.C, CartanFamily.D)
)


class ClassicalType(str, Enum):
    """
    Orbit partition conventions. A partition of type B has odd size, C and D
    have even size.
    """
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'

    @property
    def dual(self) -> 'ClassicalType':
        return {
            ClassicalType.B: ClassicalType.C,
            ClassicalType.C: ClassicalType.B
        }.get(self, self)

    def partition_size(self, rank: int) -> int:
        """Size of the natural representation for a group of this rank"""
        if self is ClassicalType.A:
            return rank
        if self is ClassicalType.B:
            return 2 * rank + 1
        return 2 * rank


class IsogenyForm(str, Enum):
    """
    Which group in the isogeny class a cover lives on. ``SC`` is the simply
    connected form (Spin, SL, Sp, exceptional).
    """
    SC = 'simplyConnected'
    SO = 'SO'
    GL = 'GL'
    SP = 'Sp'


class Raisability(str, Enum):
    # some clause of the raisability criterion holds
    Raisable = 'yes'
    # criterion applies but no clause holds, which is weaker than
    # "not raisable"
    NotRaisableByCriterion = 'no_by_criterion'
    # nothing the criterion could be applied to
    NotApplicable = 'not_applicable'
