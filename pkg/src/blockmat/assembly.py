"""
Block assembly of H, H0, E and F and the products every other module relies on
"""

import logging
from typing import Sequence, Tuple, List

import numpy as np

from ..common.constants import Defaults
from ..common.enums import MatrixKind
from ..common.exceptions import DimensionMismatchError, ArithmeticOverflowError
from ..models.small_matrix import SmallMatrix, IntVector
from ..models.four_block_spec import FourBlockSpec
from ..models.brick_vector import BrickVector

logger = logging.getLogger(__name__)


def view_blocks(
    spec: FourBlockSpec, kind: MatrixKind
) -> Tuple[SmallMatrix, SmallMatrix, SmallMatrix, SmallMatrix]:
    """(A, B, C, D) with the blocks that `kind` removes replaced by zeros"""
    A, B, C, D = spec.A, spec.B, spec.C, spec.D
    if kind in (MatrixKind.H0, MatrixKind.E, MatrixKind.F):
        C = SmallMatrix.zeros(C.rows, C.cols)
    if kind == MatrixKind.E:
        B = SmallMatrix.zeros(B.rows, B.cols)
    if kind == MatrixKind.F:
        D = SmallMatrix.zeros(D.rows, D.cols)
    return A, B, C, D


def assemble(spec: FourBlockSpec, kind: MatrixKind = MatrixKind.H) -> SmallMatrix:
    """Materialize the (s_C + n*s_A) x (t_B + n*t_A) matrix of the given kind"""
    A, B, C, D = view_blocks(spec, kind)
    n = spec.n
    grid: List[Tuple[int, ...]] = []

    for r in range(C.rows):
        grid.append(C.row(r) + D.row(r) * n)

    zero_brick = (0,) * A.cols
    for i in range(n):
        for r in range(A.rows):
            grid.append(
                B.row(r) + zero_brick * i + A.row(r) + zero_brick * (n - i - 1)
            )

    matrix = SmallMatrix.from_rows(grid, cols=spec.cols)
    logger.debug(f"Assembled {kind.value} of shape {matrix.shape}")
    return matrix


def apply(M: SmallMatrix, x: Sequence[int]) -> IntVector:
    """Exact M.x; raises instead of wrapping when int64 could overflow"""
    if len(x) != M.cols:
        raise DimensionMismatchError(
            f"Matrix has {M.cols} columns, vector has length {len(x)}"
        )
    if M.rows == 0:
        return ()
    if M.cols == 0:
        return (0,) * M.rows

    max_x = max(abs(int(v)) for v in x)
    if M.cols * M.max_abs_entry * max_x >= Defaults.INT64_SAFE_BOUND:
        raise ArithmeticOverflowError(
            f"Product of {M.rows}x{M.cols} matrix (max entry {M.max_abs_entry}) "
            f"with vector of max entry {max_x} may overflow"
        )
    product = M.array @ np.asarray(x, dtype=np.int64)
    return tuple(int(v) for v in product)


def block_apply(
    spec: FourBlockSpec, x: BrickVector, kind: MatrixKind = MatrixKind.H
) -> Tuple[IntVector, Tuple[IntVector, ...]]:
    """
    Brick-wise product without materializing H.

    Returns (top, per_brick) with top = C x0 + sum_i D x^i and
    per_brick[i-1] = B x0 + A x^i.
    """
    if (x.t_B, x.n) != (spec.t_B, spec.n) or (spec.n and x.t_A != spec.t_A):
        raise DimensionMismatchError(
            f"Brick vector shape ({x.t_B}, {x.n}x{x.t_A}) does not match spec "
            f"({spec.t_B}, {spec.n}x{spec.t_A})"
        )
    A, B, C, D = view_blocks(spec, kind)

    top = list(apply(C, x.brick0))
    for brick in x.bricks:
        for r, v in enumerate(apply(D, brick)):
            top[r] += v

    b_x0 = apply(B, x.brick0)
    per_brick = tuple(
        tuple(a + b for a, b in zip(apply(A, brick), b_x0)) for brick in x.bricks
    )
    return tuple(top), per_brick


def in_kernel(
    spec: FourBlockSpec, x: BrickVector, kind: MatrixKind = MatrixKind.H
) -> bool:
    top, per_brick = block_apply(spec, x, kind)
    return all(v == 0 for v in top) and all(v == 0 for row in per_brick for v in row)


def flat_block_apply(
    spec: FourBlockSpec, flat: Sequence[int], kind: MatrixKind = MatrixKind.H
) -> IntVector:
    """block_apply on a flat vector, rows in H order"""
    x = BrickVector.from_flat(flat, spec.t_B, spec.t_A, spec.n)
    top, per_brick = block_apply(spec, x, kind)
    return top + tuple(v for row in per_brick for v in row)
