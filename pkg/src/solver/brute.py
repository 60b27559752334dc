"""
Brute-force oracle: full enumeration of the feasible box
"""

import logging
from typing import Optional

from ..blockmat import assemble
from ..common import system_logger, log_function_calls
from ..common.enums import MatrixKind, SolveStatus
from ..graver.enumeration import enumerate_box
from ..models.ip_instance import IPInstance
from ..models.solve_models import SolveResult, SolveStats

logger = logging.getLogger(__name__)


def constraint_matrix(inst: IPInstance):
    if inst.is_explicit:
        return inst.constraint
    return assemble(inst.block_spec, MatrixKind.H)


@log_function_calls(system_logger)
def brute_solve(
    inst: IPInstance, radius: int, node_budget: Optional[int] = None
) -> SolveResult:
    """
    Optimum over the feasible points with every variable clamped to
    [-radius, radius]; ties go to the lexicographically smallest point.

    The result is certified when clamping cut nothing off.
    """
    lower = [-radius if lo is None else max(lo, -radius) for lo in inst.lower]
    upper = [radius if hi is None else min(hi, radius) for hi in inst.upper]
    clamped = any(
        lo is None or hi is None or lo < -radius or hi > radius
        for lo, hi in zip(inst.lower, inst.upper)
    )

    best = None
    best_value = None
    count = 0
    for x in enumerate_box(constraint_matrix(inst), inst.b, lower, upper, node_budget):
        count += 1
        value = sum(w * a for w, a in zip(inst.w, x))
        if best_value is None or value < best_value:
            best, best_value = x, value

    logger.debug(f"brute_solve scanned {count} feasible points")
    if best is None:
        return SolveResult(SolveStatus.INFEASIBLE, stats=SolveStats(), certified=not clamped)
    return SolveResult(
        SolveStatus.OPTIMAL,
        solution=inst.split(best),
        objective=best_value,
        stats=SolveStats(),
        certified=not clamped,
    )
