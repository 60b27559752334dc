"""
Exact integer vector helpers shared by every module
"""

from typing import Sequence, Tuple

from ..common.exceptions import DimensionMismatchError
from ..models.small_matrix import IntVector


def _check(x: Sequence[int], y: Sequence[int]):
    if len(x) != len(y):
        raise DimensionMismatchError(f"Vectors of length {len(x)} and {len(y)}")


def vec_add(x: Sequence[int], y: Sequence[int]) -> IntVector:
    _check(x, y)
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Sequence[int], y: Sequence[int]) -> IntVector:
    _check(x, y)
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(k: int, x: Sequence[int]) -> IntVector:
    return tuple(k * a for a in x)


def vec_sum(vectors: Sequence[Sequence[int]], dim: int) -> IntVector:
    acc = [0] * dim
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatchError(f"Expected dimension {dim}, got {len(v)}")
        for j, a in enumerate(v):
            acc[j] += a
    return tuple(acc)


def dot(x: Sequence[int], y: Sequence[int]) -> int:
    _check(x, y)
    return sum(a * b for a, b in zip(x, y))


def norm_inf(x: Sequence[int]) -> int:
    return max((abs(a) for a in x), default=0)


def norm_1(x: Sequence[int]) -> int:
    return sum(abs(a) for a in x)


def is_zero(x: Sequence[int]) -> bool:
    return all(a == 0 for a in x)


def signs(x: Sequence[int]) -> Tuple[int, ...]:
    return tuple((a > 0) - (a < 0) for a in x)
