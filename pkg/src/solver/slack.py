"""
Slack columns inside the bricks

Appending identity blocks to D and A keeps the 4-block shape:

    D~ = (D, +-I_{s_C} ..., 0),   A~ = (A, 0, +-I_{s_A} ...)

so every brick carries its own copy of the top-row slacks and of its own
brick-row slacks.
"""

from typing import List, Optional, Sequence, Tuple

from ..blockmat import apply
from ..common.exceptions import PreconditionViolationError
from ..models.small_matrix import SmallMatrix, IntVector
from ..models.four_block_spec import FourBlockSpec
from ..models.brick_vector import BrickVector
from ..models.ip_instance import IPInstance
from .brute import constraint_matrix


def with_slack_columns(
    spec: FourBlockSpec, top_signs: Sequence[int], brick_signs: Sequence[int]
) -> FourBlockSpec:
    """Brick layout: [x (t_A) | top slacks per sign (s_C each) | brick slacks per sign (s_A each)]"""
    s_A, s_C = spec.s_A, spec.s_C
    top_width = len(top_signs) * s_C
    brick_width = len(brick_signs) * s_A
    D = SmallMatrix.hstack(
        [spec.D]
        + [SmallMatrix.identity(s_C, sign) for sign in top_signs]
        + [SmallMatrix.zeros(s_C, brick_width)]
    )
    A = SmallMatrix.hstack(
        [spec.A, SmallMatrix.zeros(s_A, top_width)]
        + [SmallMatrix.identity(s_A, sign) for sign in brick_signs]
    )
    return FourBlockSpec(A, spec.B, spec.C, D, spec.n)


def _brick_slices(inst: IPInstance) -> List[slice]:
    spec = inst.block_spec
    return [
        slice(spec.t_B + i * spec.t_A, spec.t_B + (i + 1) * spec.t_A)
        for i in range(spec.n)
    ]


def inequality_to_equality(inst: IPInstance) -> IPInstance:
    """
    Read inst as H x <= b and return the equivalent equality instance with
    one nonnegative slack per row and brick. The objective ignores slacks.
    """
    spec = inst.block_spec
    augmented = with_slack_columns(spec, [1], [1])
    extra = spec.s_C + spec.s_A
    lower: List[Optional[int]] = list(inst.lower[: spec.t_B])
    upper: List[Optional[int]] = list(inst.upper[: spec.t_B])
    w: List[int] = list(inst.w[: spec.t_B])
    for sl in _brick_slices(inst):
        lower += list(inst.lower[sl]) + [0] * extra
        upper += list(inst.upper[sl]) + [None] * extra
        w += list(inst.w[sl]) + [0] * extra
    return IPInstance(
        augmented, inst.b, tuple(lower), tuple(upper), tuple(w), inst.three_block
    )


def _clamp_zero(lo: Optional[int], hi: Optional[int]) -> int:
    if lo is not None and lo > 0:
        return lo
    if hi is not None and hi < 0:
        return hi
    return 0


def clamped_origin(inst: IPInstance) -> BrickVector:
    """The point closest to 0 inside the bounds"""
    return inst.split(tuple(_clamp_zero(lo, hi) for lo, hi in zip(inst.lower, inst.upper)))


def _split_residual(r: int) -> Tuple[int, int]:
    return max(r, 0), max(-r, 0)


def phase_one(inst: IPInstance) -> Tuple[IPInstance, BrickVector]:
    """
    Feasibility instance with slacks y+ - y- on every row and a feasible
    start. The objective is the slack sum; its optimum is 0 exactly when
    inst is feasible.

    The start clamps x to the point nearest 0 and puts the residual of the
    top rows into brick 1 and each brick residual into its own brick. Slack
    upper bounds are the start's residuals, so unused slacks are fixed at 0.
    """
    spec = inst.block_spec
    s_A, s_C, t_B = spec.s_A, spec.s_C, spec.t_B
    augmented = with_slack_columns(spec, [1, -1], [1, -1])

    x = clamped_origin(inst)
    image = apply(constraint_matrix(inst), x.flatten())
    residual = tuple(b - hx for b, hx in zip(inst.b, image))
    r_top, r_bricks = residual[:s_C], residual[s_C:]

    lower: List[Optional[int]] = list(inst.lower[:t_B])
    upper: List[Optional[int]] = list(inst.upper[:t_B])
    w: List[int] = [0] * t_B
    bricks: List[IntVector] = []
    for i, sl in enumerate(_brick_slices(inst)):
        top = r_top if i == 0 else (0,) * s_C
        own = r_bricks[i * s_A : (i + 1) * s_A]
        pos_top = [_split_residual(r)[0] for r in top]
        neg_top = [_split_residual(r)[1] for r in top]
        pos_own = [_split_residual(r)[0] for r in own]
        neg_own = [_split_residual(r)[1] for r in own]
        slacks = pos_top + neg_top + pos_own + neg_own

        bricks.append(tuple(x.brick(i + 1)) + tuple(slacks))
        lower += list(inst.lower[sl]) + [0] * len(slacks)
        upper += list(inst.upper[sl]) + slacks
        w += [0] * spec.t_A + [1] * len(slacks)

    feasibility = IPInstance(
        augmented, inst.b, tuple(lower), tuple(upper), tuple(w), inst.three_block
    )
    start = BrickVector(x.brick0, tuple(bricks))
    return feasibility, start


def strip_slacks(inst: IPInstance, augmented_point: BrickVector) -> BrickVector:
    """Drop the slack coordinates of a point of a slack-augmented instance"""
    t_A = inst.block_spec.t_A
    point = BrickVector(
        augmented_point.brick0, tuple(z[:t_A] for z in augmented_point.bricks)
    )
    if point.dimension != inst.cols:
        raise PreconditionViolationError("Point does not match the instance layout")
    return point


