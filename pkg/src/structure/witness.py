"""
Conforming witnesses: a kernel vector z ⊑ y with 0 < ||z||_1 < ||y||_1
proves y is not a Graver element of H0
"""

import logging
from typing import List, Optional, Sequence, Tuple

from ..blockmat import assemble, in_kernel
from ..common import system_logger, log_function_calls
from ..common.enums import MatrixKind, QuantityType
from ..common.exceptions import (
    BudgetExceededError,
    InfeasibleAtXiError,
    InvariantViolationError,
    JobsNotRepresentableError,
    NotInKernelError,
    PreconditionViolationError,
)
from ..config.settings import config_manager
from ..graver.enumeration import enumerate_box
from ..graver.order import conforms
from ..merging import merge_kd
from ..models.brick_vector import BrickVector
from ..models.four_block_spec import FourBlockSpec
from ..models.small_matrix import IntVector
from ..models.structure_models import BrickTypeAssignment, Centralization
from .brick_types import assign_brick_types, principle_types
from .centralization import centralize, default_gamma, job_kinds, relocate_addons
from .orthant import decompose_same_orthant, expand_subsets, reduce_vectors

logger = logging.getLogger(__name__)


def is_witness(z: BrickVector, y: BrickVector, spec: FourBlockSpec) -> bool:
    return (
        in_kernel(spec, z, MatrixKind.H0)
        and conforms(z.flatten(), y.flatten())
        and 0 < z.norm_1() < y.norm_1()
    )


def centralized_signs_hold(
    types: BrickTypeAssignment, central: Centralization
) -> bool:
    """Large coordinates keep their sign in y_tilde; small ones stay within 2*gamma"""
    limit = 2 * types.gamma
    for brick, kinds in zip(central.y_tilde.bricks, types.quantity_types):
        for a, kind in zip(brick, kinds):
            if kind == QuantityType.POS_LARGE and a <= 0:
                return False
            if kind == QuantityType.NEG_LARGE and a >= 0:
                return False
            if kind == QuantityType.SMALL and abs(a) > limit:
                return False
    return True


def centralized_parts(
    y: BrickVector, spec: FourBlockSpec, state_budget: Optional[int] = None
) -> Tuple[Optional[Centralization], List[BrickVector]]:
    """
    Kernel parts summing to the centralization y_tilde of y: the principals
    and the relocated add-ons. Without principals nothing is centralized and
    the same-orthant parts of y come back with None.
    """
    sod = decompose_same_orthant(y, spec, None, state_budget)
    if not sod.principals or not y.n:
        return None, sod.principals + sod.addons
    jobs = job_kinds(sod.addons)
    types = assign_brick_types(y, default_gamma(jobs), principle_types(y, sod))
    central = centralize(y, types, sod, jobs)
    if central.max_deviation() > central.job_norm_sum:
        raise InvariantViolationError("Centralized bricks drift beyond the job norm sum")
    if not centralized_signs_hold(types, central):
        raise InvariantViolationError("Centralized coordinates leave their quantity type")
    relocated = relocate_addons(sod.addons, types, central)
    return central, sod.principals + [d for d in relocated if not d.is_zero()]


def _merged_sums(parts: Sequence[BrickVector]) -> List[IntVector]:
    """The parts and the sums of their conformal merge, principals merged first"""
    flats = [p.flatten() for p in parts]
    if len(flats) < 2:
        return flats
    sums = list(flats)
    principals = [f for p, f in zip(parts, flats) if any(p.brick0)]
    for stage in (principals, flats):
        if len(stage) < 2:
            continue
        reduced, kept = reduce_vectors(stage)
        if kept:
            subsets = [sorted(T) for T in merge_kd(reduced).subsets]
            sums += expand_subsets(stage, subsets)
    return sums


def _pipeline_witness(
    y: BrickVector, spec: FourBlockSpec, state_budget: Optional[int]
) -> Optional[BrickVector]:
    """Smallest merged part of y_tilde that also conforms to y and splits it"""
    _, parts = centralized_parts(y, spec, state_budget)
    found = [
        z
        for z in (
            BrickVector.from_flat(flat, spec.t_B, spec.t_A, spec.n)
            for flat in set(_merged_sums(parts))
        )
        if is_witness(z, y, spec)
    ]
    return min(found, key=lambda z: (z.norm_1(), z.flatten()), default=None)


def _enumerated_witness(
    y: BrickVector, spec: FourBlockSpec, node_budget: int
) -> Optional[BrickVector]:
    """First kernel vector in the conforming box of y other than 0 and y"""
    flat = y.flatten()
    lower = [min(a, 0) for a in flat]
    upper = [max(a, 0) for a in flat]
    H0 = assemble(spec, MatrixKind.H0)
    for z in enumerate_box(H0, (0,) * H0.rows, lower, upper, node_budget):
        if any(z) and z != flat:
            return BrickVector.from_flat(z, spec.t_B, spec.t_A, spec.n)
    return None


@log_function_calls(system_logger)
def sign_compatible_witness(
    y: BrickVector,
    spec: FourBlockSpec,
    node_budget: Optional[int] = None,
    state_budget: Optional[int] = None,
) -> Optional[BrickVector]:
    """
    A witness z ⊑ y in ker(H0) with 0 < ||z||_1 < ||y||_1, or None when y
    is ⊑-minimal. Budget exhaustion raises instead of returning None.
    """
    if y.is_zero():
        raise PreconditionViolationError("sign_compatible_witness needs y != 0")
    if not in_kernel(spec, y, MatrixKind.H0):
        raise NotInKernelError("sign_compatible_witness needs H0 y = 0")
    if node_budget is None:
        node_budget = config_manager.config.budgets.witness_node_budget

    z = None
    try:
        z = _pipeline_witness(y, spec, state_budget)
    except (InfeasibleAtXiError, JobsNotRepresentableError, BudgetExceededError) as e:
        logger.debug(f"Witness pipeline gave up ({type(e).__name__}); enumerating")
    if z is None:
        z = _enumerated_witness(y, spec, node_budget)
    if z is not None and not is_witness(z, y, spec):
        raise InvariantViolationError(f"Witness {z.flatten()} fails its check")
    return z
