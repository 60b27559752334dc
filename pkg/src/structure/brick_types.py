"""
Brick typing against a threshold Gamma
"""

from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from ..common.enums import QuantityType
from ..common.exceptions import PreconditionViolationError
from ..models.small_matrix import IntVector
from ..models.brick_vector import BrickVector
from ..models.structure_models import BrickTypeAssignment, SameOrthantDecomposition


def quantity_type(brick: IntVector, gamma: int) -> Tuple[QuantityType, ...]:
    # |x_j| <= gamma is small; the sign separates the large ones
    return tuple(
        QuantityType.SMALL
        if abs(x) <= gamma
        else (QuantityType.POS_LARGE if x > 0 else QuantityType.NEG_LARGE)
        for x in brick
    )


def principle_types(
    y: BrickVector, decomposition: SameOrthantDecomposition
) -> List[Tuple[IntVector, ...]]:
    """Per brick 1..n: the tuple of that brick across all principals"""
    return [
        tuple(e.brick(i) for e in decomposition.principals) for i in range(1, y.n + 1)
    ]


def assign_brick_types(
    y: BrickVector,
    gamma: int,
    principle_types: Optional[Sequence[Hashable]] = None,
) -> BrickTypeAssignment:
    """
    Group bricks 1..n by quantity type, and by principle type when given.
    Brick 1 always forms its own group; the other groups follow the order
    in which their first brick appears.
    """
    if gamma < 1:
        raise PreconditionViolationError(f"gamma must be at least 1, got {gamma}")
    if principle_types is not None and len(principle_types) != y.n:
        raise PreconditionViolationError("One principle type per brick is needed")

    types = [quantity_type(b, gamma) for b in y.bricks]
    groups: List[List[int]] = [[1]] if y.n else []
    index: Dict[Hashable, int] = {}
    for i in range(2, y.n + 1):
        key = (types[i - 1], principle_types[i - 1] if principle_types else None)
        if key not in index:
            index[key] = len(groups)
            groups.append([])
        groups[index[key]].append(i)
    return BrickTypeAssignment(gamma, types, groups)
