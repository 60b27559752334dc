from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Dict, Optional, Any

from ..common.enums import QuantityType, CanonicalMarker
from .small_matrix import IntVector
from .brick_vector import BrickVector


@dataclass
class BoundedDecomposition:
    """Kernel summands of bounded norm whose brick 0 parts conform to the input"""

    summands: List[BrickVector]
    xi: int

    def total(self, like: BrickVector) -> BrickVector:
        acc = BrickVector.zero(like.t_B, like.t_A, like.n)
        for e in self.summands:
            acc = acc + e
        return acc

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {"summands": [e.to_dict() for e in self.summands], "xi": self.xi}


@dataclass(frozen=True)
class CanonicalEntry:
    """One slot of a canonical set: brick 0 value u and its representative"""

    u: IntVector
    marker: CanonicalMarker
    representative: Optional[BrickVector] = None


@dataclass
class SameOrthantDecomposition:
    principals: List[BrickVector]
    addons: List[BrickVector]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "principals": [e.to_dict() for e in self.principals],
            "addons": [e.to_dict() for e in self.addons],
        }


@dataclass
class BrickTypeAssignment:
    """
    Grouping of bricks 1..n by quantity type (and principle type when given).

    `quantity_types[i - 1]` is the type vector of brick i; `groups[0]` is
    always {1}.
    """

    gamma: int
    quantity_types: List[Tuple[QuantityType, ...]]
    groups: List[List[int]]

    def group_of(self, brick: int) -> int:
        for j, group in enumerate(self.groups):
            if brick in group:
                return j
        raise KeyError(brick)


@dataclass
class Centralization:
    """Jobs redistributed evenly across bricks of each group"""

    y_tilde: BrickVector
    job_counts: Dict[Tuple[int, int], List[int]]  # (group, job kind) -> per-brick counts
    jobs: List[IntVector]
    # exact group averages y_f^i per brick 1..n
    y_f: List[Tuple[Fraction, ...]] = field(default_factory=list)

    @property
    def job_norm_sum(self) -> int:
        return sum(max((abs(v) for v in job), default=0) for job in self.jobs)

    def max_deviation(self) -> Fraction:
        """max_i ||y_tilde^i - y_f^i||_inf"""
        return max(
            (
                abs(Fraction(a) - f)
                for brick, avg in zip(self.y_tilde.bricks, self.y_f)
                for a, f in zip(brick, avg)
            ),
            default=Fraction(0),
        )
