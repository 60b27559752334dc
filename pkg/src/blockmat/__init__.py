"""
Exact integer matrices, block assembly and brick-structured vector arithmetic
"""

from .assembly import (
    assemble,
    apply,
    block_apply,
    in_kernel,
    flat_block_apply,
    view_blocks,
)
from .vectors import (
    vec_add,
    vec_sub,
    vec_scale,
    vec_sum,
    dot,
    norm_inf,
    norm_1,
    is_zero,
    signs,
)

__all__ = [
    "assemble",
    "apply",
    "block_apply",
    "in_kernel",
    "flat_block_apply",
    "view_blocks",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_sum",
    "dot",
    "norm_inf",
    "norm_1",
    "is_zero",
    "signs",
]
