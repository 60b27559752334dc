"""
Structural decompositions of 3-block kernel vectors
"""

from .bounded import decompose_bounded, canonical_set, check_bounded_decomposition
from .orthant import decompose_same_orthant, reduce_vectors, expand_subsets
from .brick_types import assign_brick_types, quantity_type, principle_types
from .centralization import centralize, job_kinds, default_gamma, relocate_addons
from .witness import (
    sign_compatible_witness,
    is_witness,
    centralized_parts,
    centralized_signs_hold,
)

__all__ = [
    "decompose_bounded",
    "canonical_set",
    "check_bounded_decomposition",
    "decompose_same_orthant",
    "reduce_vectors",
    "expand_subsets",
    "assign_brick_types",
    "quantity_type",
    "principle_types",
    "centralize",
    "job_kinds",
    "default_gamma",
    "relocate_addons",
    "sign_compatible_witness",
    "is_witness",
    "centralized_parts",
    "centralized_signs_hold",
]
