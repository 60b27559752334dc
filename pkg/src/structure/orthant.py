"""
Same-orthant decomposition

Bounded summands are merged into groups whose sums conform to g. Merging
happens on reduced vectors: coordinates that are zero in every summand are
dropped and coordinates that agree across all summands are kept once. A
subset sum conforms in the reduced space exactly when it conforms in full.
"""

import logging
import time
from typing import List, Optional, Sequence, Tuple

from ..blockmat import in_kernel
from ..common import system_logger
from ..common.enums import MatrixKind
from ..common.exceptions import InvariantViolationError
from ..graver.order import conforms
from ..merging import merge_kd
from ..models.small_matrix import IntVector
from ..models.four_block_spec import FourBlockSpec
from ..models.brick_vector import BrickVector
from ..models.structure_models import SameOrthantDecomposition
from .bounded import decompose_bounded

logger = logging.getLogger(__name__)


def reduce_vectors(
    vectors: Sequence[Sequence[int]],
) -> Tuple[List[IntVector], List[int]]:
    """Reduced copies of the vectors and the original coordinate kept for each reduced one"""
    if not vectors:
        return [], []
    dim = len(vectors[0])
    kept: List[int] = []
    seen = set()
    for h in range(dim):
        column = tuple(v[h] for v in vectors)
        if not any(column) or column in seen:
            continue
        seen.add(column)
        kept.append(h)
    return [tuple(v[h] for h in kept) for v in vectors], kept


def expand_subsets(
    vectors: Sequence[Sequence[int]], subsets: Sequence[Sequence[int]]
) -> List[IntVector]:
    """Full-dimensional sum of each index subset"""
    dim = len(vectors[0]) if vectors else 0
    return [
        tuple(sum(vectors[i][h] for i in subset) for h in range(dim))
        for subset in subsets
    ]


def decompose_same_orthant(
    g: BrickVector,
    spec: FourBlockSpec,
    xi: Optional[int] = None,
    state_budget: Optional[int] = None,
) -> SameOrthantDecomposition:
    """
    g = sum(principals) + sum(addons), every part a kernel vector of H0
    with part ⊑ g. Addons are the parts with brick 0 equal to 0.
    """
    if g.is_zero():
        return SameOrthantDecomposition([], [])
    start = time.time()
    dec = decompose_bounded(g, spec, xi, state_budget)
    flats = [e.flatten() for e in dec.summands]
    if len(flats) == 1:
        parts = flats
    else:
        reduced, kept = reduce_vectors(flats)
        if kept:
            partition = merge_kd(reduced)
            subsets = [sorted(T) for T in partition.subsets]
        else:
            subsets = [list(range(len(flats)))]
        parts = expand_subsets(flats, subsets)

    principals: List[BrickVector] = []
    addons: List[BrickVector] = []
    target = g.flatten()
    for flat in parts:
        part = BrickVector.from_flat(flat, spec.t_B, spec.t_A, spec.n)
        if part.is_zero():
            continue
        if not conforms(flat, target) or not in_kernel(spec, part, MatrixKind.H0):
            raise InvariantViolationError(f"Merged part {flat} is not a kernel part ⊑ g")
        (addons if not any(part.brick0) else principals).append(part)

    system_logger.log_decomposition(
        "decompose_same_orthant",
        len(principals) + len(addons),
        dec.xi,
        time.time() - start,
        {"principals": len(principals), "addons": len(addons)},
    )
    return SameOrthantDecomposition(principals, addons)
