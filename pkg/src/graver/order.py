"""
The conformal order and sign-compatibility
"""

from typing import Iterable, List, Sequence

from ..common.exceptions import DimensionMismatchError
from ..models.small_matrix import IntVector


def conforms(x: Sequence[int], y: Sequence[int]) -> bool:
    """x ⊑ y: |x_i| <= |y_i| and x_i * y_i >= 0 for every i"""
    if len(x) != len(y):
        raise DimensionMismatchError(f"Vectors of length {len(x)} and {len(y)}")
    return all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(x, y))


def sign_compatible(x: Sequence[int], y: Sequence[int]) -> bool:
    if len(x) != len(y):
        raise DimensionMismatchError(f"Vectors of length {len(x)} and {len(y)}")
    return all(a * b >= 0 for a, b in zip(x, y))


def pairwise_sign_compatible(vectors: Sequence[Sequence[int]]) -> bool:
    """True when all vectors lie in one common orthant"""
    if not vectors:
        return True
    dim = len(vectors[0])
    for j in range(dim):
        column = [v[j] for v in vectors]
        if any(a > 0 for a in column) and any(a < 0 for a in column):
            return False
    return True


def minimal_elements(vectors: Iterable[Sequence[int]]) -> List[IntVector]:
    """
    The ⊑-minimal nonzero vectors among the input.

    Output is sorted by 1-norm then lexicographically. A strictly smaller
    conformal vector always has a strictly smaller 1-norm, so scanning in
    that order only ever compares against already accepted elements.
    """
    candidates = sorted(
        {tuple(v) for v in vectors if any(v)},
        key=lambda v: (sum(abs(a) for a in v), v),
    )
    accepted: List[IntVector] = []
    for v in candidates:
        if not any(conforms(g, v) for g in accepted):
            accepted.append(v)
    return accepted
