"""
Prefix-sum collisions (pigeonhole on bounded prefixes)
"""

from typing import Dict, Optional, Sequence, Tuple

from ..common.exceptions import PreconditionViolationError
from ..models.small_matrix import IntVector
from .rearrangement import as_vectors


def prefix_collision(
    vectors: Sequence, box_radius: int
) -> Optional[Tuple[int, int]]:
    """
    First pair l1 < l2 with equal prefix sums (the empty prefix is l = 0).

    Every prefix must lie in the box of the given radius; a sequence longer
    than (2*box_radius + 1)^dim is guaranteed a collision.
    """
    vecs = as_vectors(vectors)
    dim = len(vecs[0]) if vecs else 0
    prefix: IntVector = (0,) * dim
    first_seen: Dict[IntVector, int] = {prefix: 0}
    for ell, v in enumerate(vecs, start=1):
        prefix = tuple(a + b for a, b in zip(prefix, v))
        if any(abs(a) > box_radius for a in prefix):
            raise PreconditionViolationError(
                f"Prefix {ell} = {prefix} escapes the box of radius {box_radius}"
            )
        if prefix in first_seen:
            return first_seen[prefix], ell
        first_seen[prefix] = ell
    return None
