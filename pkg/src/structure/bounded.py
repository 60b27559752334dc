"""
Bounded-norm decomposition of 3-block kernel vectors and canonical sets
"""

import itertools
import logging
import time
from typing import List, Optional

from ..blockmat import in_kernel
from ..common import system_logger, log_function_calls
from ..common.enums import CanonicalMarker, MatrixKind
from ..common.exceptions import (
    InfeasibleAtXiError,
    InvariantViolationError,
    NotInKernelError,
    PreconditionViolationError,
)
from ..config.settings import config_manager
from ..graver.order import conforms
from ..models.small_matrix import IntVector
from ..models.four_block_spec import FourBlockSpec
from ..models.brick_vector import BrickVector
from ..models.structure_models import BoundedDecomposition, CanonicalEntry
from ..solver.dp import brick_dp

logger = logging.getLogger(__name__)


def _conforming_guesses(r0: IntVector, xi: int):
    """Every v with v ⊑ r0 and ||v||_inf <= xi, lexicographic"""
    ranges = []
    for a in r0:
        bound = min(abs(a), xi)
        ranges.append(range(0, bound + 1) if a >= 0 else range(-bound, 1))
    return itertools.product(*ranges)


def _best_reduction(
    r: BrickVector, spec: FourBlockSpec, xi: int, state_budget: Optional[int]
) -> Optional[BrickVector]:
    """
    The kernel vector e with ||e||_inf <= xi and e0 ⊑ r0 that shrinks
    ||r - e||_1 the most, or None when none shrinks it.
    """
    windows = [((-xi,) * spec.t_A, (xi,) * spec.t_A)] * spec.n

    def cost(i: int, z: IntVector) -> int:
        return sum(abs(a - b) - abs(a) for a, b in zip(r.brick(i), z))

    best = None
    for v in _conforming_guesses(r.brick0, xi):
        found = brick_dp(spec, v, windows, cost, MatrixKind.H0, state_budget)
        if found is None:
            continue
        total = found[0] + sum(abs(a - b) - abs(a) for a, b in zip(r.brick0, v))
        key = (total, v, found[1])
        if best is None or key < best:
            best = key
    if best is None or best[0] >= 0:
        return None
    return BrickVector(best[1], best[2])


def _decompose_at(
    g: BrickVector, spec: FourBlockSpec, xi: int, state_budget: Optional[int]
) -> List[BrickVector]:
    summands: List[BrickVector] = []
    residual = g
    while not residual.is_zero():
        if residual.norm_inf() <= xi:
            summands.append(residual)
            break
        e = _best_reduction(residual, spec, xi, state_budget)
        if e is None:
            raise InfeasibleAtXiError(
                f"No bounded kernel step shrinks the residual at xi={xi}", xi
            )
        summands.append(e)
        residual = residual - e
    return summands


def check_bounded_decomposition(
    g: BrickVector, spec: FourBlockSpec, dec: BoundedDecomposition
):
    """Sum, kernel membership, brick-0 conformality and norm of every summand"""
    if dec.total(g) != g:
        raise InvariantViolationError("Summands do not add up to the input")
    for e in dec.summands:
        if not in_kernel(spec, e, MatrixKind.H0):
            raise InvariantViolationError(f"Summand {e.flatten()} is not in ker(H0)")
        if not conforms(e.brick0, g.brick0):
            raise InvariantViolationError(f"Summand brick 0 {e.brick0} does not conform")
        if e.norm_inf() > dec.xi:
            raise InvariantViolationError(f"Summand norm {e.norm_inf()} exceeds xi={dec.xi}")


@log_function_calls(system_logger)
def decompose_bounded(
    g: BrickVector,
    spec: FourBlockSpec,
    xi: Optional[int] = None,
    state_budget: Optional[int] = None,
) -> BoundedDecomposition:
    """
    Write g in ker(H0) as a sum of kernel vectors of infinity-norm <= xi
    whose brick 0 parts conform to g's.

    Each round subtracts the bounded kernel vector that most shrinks the
    residual's 1-norm, so summands can leave g's orthant. Without xi the
    cap doubles from 1 up to the configured escalation cap; the reported
    xi is the cap that succeeded.
    """
    if not in_kernel(spec, g, MatrixKind.H0):
        raise NotInKernelError("decompose_bounded needs H0 g = 0")
    if xi is not None and xi < 1:
        raise PreconditionViolationError(f"xi must be at least 1, got {xi}")

    start = time.time()
    if xi is not None:
        caps = [xi]
    else:
        cap = config_manager.config.budgets.xi_escalation_cap
        caps = [1 << k for k in range(cap.bit_length()) if 1 << k <= cap]

    for attempt in caps:
        try:
            summands = _decompose_at(g, spec, attempt, state_budget)
        except InfeasibleAtXiError as e:
            logger.debug(str(e))
            if attempt == caps[-1]:
                raise
            continue
        dec = BoundedDecomposition(summands, attempt)
        check_bounded_decomposition(g, spec, dec)
        system_logger.log_decomposition(
            "decompose_bounded", len(summands), attempt, time.time() - start
        )
        return dec
    raise InfeasibleAtXiError("No xi to try", caps[-1] if caps else 0)


def _representative(
    spec: FourBlockSpec, u: IntVector, radius: int, state_budget: Optional[int]
) -> Optional[BrickVector]:
    windows = [((-radius,) * spec.t_A, (radius,) * spec.t_A)] * spec.n
    found = brick_dp(spec, u, windows, lambda i, z: 0, MatrixKind.H0, state_budget)
    if found is None:
        return None
    return BrickVector(u, found[1])


def _minimal_representative(
    spec: FourBlockSpec, u: IntVector, radius_cap: int, state_budget: Optional[int]
) -> Optional[BrickVector]:
    """Representative of least infinity-norm: doubling, then bisection"""
    floor = max(abs(a) for a in u)
    hi = max(floor, 1)
    found = _representative(spec, u, hi, state_budget)
    while found is None and hi < radius_cap:
        hi = min(2 * hi, radius_cap)
        found = _representative(spec, u, hi, state_budget)
    if found is None:
        return None
    lo = floor - 1  # nothing below |u|_inf is possible
    while hi - lo > 1:
        mid = (lo + hi) // 2
        attempt = _representative(spec, u, mid, state_budget)
        if attempt is None:
            lo = mid
        else:
            hi, found = mid, attempt
    return found


@log_function_calls(system_logger)
def canonical_set(
    spec: FourBlockSpec,
    xi: int,
    radius_cap: Optional[int] = None,
    state_budget: Optional[int] = None,
) -> List[CanonicalEntry]:
    """
    One slot per brick-0 value u with ||u||_inf <= xi, lexicographic.

    A slot holds a kernel vector of H0 with brick 0 equal to u and least
    infinity-norm (searched up to radius_cap), or a marker: ZERO for u = 0,
    INFEASIBLE when no such vector exists within the cap.
    """
    if xi < 1:
        raise PreconditionViolationError(f"xi must be at least 1, got {xi}")
    if radius_cap is None:
        radius_cap = config_manager.config.budgets.xi_escalation_cap
    entries: List[CanonicalEntry] = []
    for u in itertools.product(range(-xi, xi + 1), repeat=spec.t_B):
        if not any(u):
            entries.append(CanonicalEntry(u, CanonicalMarker.ZERO))
            continue
        rep = _minimal_representative(spec, u, max(radius_cap, xi), state_budget)
        if rep is None:
            entries.append(CanonicalEntry(u, CanonicalMarker.INFEASIBLE))
        else:
            entries.append(CanonicalEntry(u, CanonicalMarker.FOUND, rep))
    logger.debug(
        f"canonical_set: {sum(e.marker == CanonicalMarker.FOUND for e in entries)} "
        f"representatives out of {len(entries)} slots"
    )
    return entries
