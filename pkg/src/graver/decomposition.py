"""
Positive decomposition of kernel vectors into conforming Graver elements
"""

import logging
from typing import List, Sequence, Tuple

from ..blockmat import apply
from ..common.exceptions import NotInKernelError, IncompleteBasisError
from ..models.small_matrix import IntVector
from ..models.graver_set import GraverSet
from .order import conforms

logger = logging.getLogger(__name__)


def max_multiple(g: Sequence[int], y: Sequence[int]) -> int:
    """Largest alpha with alpha*g ⊑ y, assuming g ⊑ y and g != 0"""
    return min(abs(b) // abs(a) for a, b in zip(g, y) if a != 0)


def graver_decompose(
    y: Sequence[int], G: GraverSet
) -> List[Tuple[int, IntVector]]:
    """
    Write y = sum alpha_i g_i with every g_i ⊑ y.

    Greedy: each step takes the conforming element of largest
    infinity-norm (lexicographically smallest on ties) with its largest
    admissible coefficient.
    """
    y = tuple(y)
    if any(apply(G.matrix, y)):
        raise NotInKernelError(f"Vector {y} is not in the kernel")
    if not G.certified_complete:
        logger.warning("Decomposing over a Graver set that is not certified complete")

    ordered = sorted(G.elements, key=lambda g: (-max(abs(a) for a in g), g))
    residual = y
    terms: List[Tuple[int, IntVector]] = []
    while any(residual):
        g = next((g for g in ordered if conforms(g, residual)), None)
        if g is None:
            raise IncompleteBasisError(
                f"No basis element conforms to the residual {residual}"
            )
        alpha = max_multiple(g, residual)
        terms.append((alpha, g))
        residual = tuple(r - alpha * a for r, a in zip(residual, g))
    return terms


def orthant_filter(G: GraverSet) -> List[IntVector]:
    """Elements of G lying in the nonnegative orthant"""
    return [g for g in G.sorted_elements() if all(a >= 0 for a in g)]
