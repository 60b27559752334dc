"""
Augmentation loop

From a feasible x, repeatedly take the best step rho*g over rho = 2^k and
brick-0 guesses v, where g comes from the brick DP. The loop stops when no
step improves w.x. Infeasible starts go through the phase-one instance.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from ..blockmat import apply
from ..common import system_logger, log_function_calls
from ..common.enums import SolveStatus
from ..common.exceptions import BudgetExceededError, InvariantViolationError
from ..config.settings import config_manager
from ..models.small_matrix import IntVector
from ..models.brick_vector import BrickVector
from ..models.ip_instance import IPInstance
from ..models.solve_models import SolveResult, SolveStats, SolverCaps, StepQuery
from .brute import constraint_matrix
from .dp import best_step_dp, step_window
from .estimate import estimate_guess_radius
from .slack import clamped_origin, phase_one, strip_slacks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResolvedCaps:
    xi: int
    guess_radius: int
    max_rho_exponent: int
    dp_state_budget: int
    augmentation_step_budget: int
    certified: bool


def _widths(inst: IPInstance) -> Optional[Tuple[int, int]]:
    """(widest box width, widest brick-0 width), or None with an infinite bound"""
    if not inst.is_bounded():
        return None
    widths = [hi - lo for lo, hi in zip(inst.lower, inst.upper)]
    t_B = inst.block_spec.t_B
    return max(max(widths, default=0), 1), max(max(widths[:t_B], default=0), 0)


def resolve_caps(
    inst: IPInstance, caps: SolverCaps, fallback_radius: Optional[int] = None
) -> ResolvedCaps:
    """
    Fill unset caps. On a finitely bounded instance the box widths cover
    every feasible step, so caps at or above them certify optimality.
    Otherwise the measured-norm estimate is used and results are heuristic.
    """
    budgets = config_manager.config.budgets
    widths = _widths(inst)
    if widths is not None:
        xi = caps.xi if caps.xi is not None else widths[0]
        radius = caps.guess_radius if caps.guess_radius is not None else widths[1]
        certified = xi >= widths[0] and radius >= widths[1]
    else:
        if (caps.xi is None or caps.guess_radius is None) and fallback_radius is None:
            fallback_radius = estimate_guess_radius(inst.block_spec)
        xi = caps.xi if caps.xi is not None else fallback_radius
        radius = caps.guess_radius if caps.guess_radius is not None else fallback_radius
        certified = False
    return ResolvedCaps(
        xi=max(xi, 1),
        guess_radius=max(radius, 0),
        max_rho_exponent=(
            caps.max_rho_exponent
            if caps.max_rho_exponent is not None
            else config_manager.config.solver.max_rho_exponent
        ),
        dp_state_budget=caps.dp_state_budget or budgets.dp_state_budget,
        augmentation_step_budget=(
            caps.augmentation_step_budget or budgets.augmentation_step_budget
        ),
        certified=certified,
    )


def is_feasible(inst: IPInstance, x: BrickVector) -> bool:
    flat = x.flatten()
    return inst.within_bounds(flat) and apply(constraint_matrix(inst), flat) == inst.b


def _finite_reach(inst: IPInstance, x: BrickVector) -> int:
    """Largest distance from x to a finite bound"""
    flat = x.flatten()
    distances = [hi - v for v, hi in zip(flat, inst.upper) if hi is not None]
    distances += [v - lo for v, lo in zip(flat, inst.lower) if lo is not None]
    return max(distances, default=1)


def _rho_schedule(inst: IPInstance, x: BrickVector, max_exponent: int) -> Iterator[int]:
    """
    2^0, 2^1, ... up to the largest distance from x to a finite bound.
    A step moving some coordinate towards a finite bound cannot be longer;
    one moving only towards infinite bounds is a ray.
    """
    top = min(max(_finite_reach(inst, x), 1).bit_length() - 1, max_exponent)
    for k in range(top + 1):
        yield 1 << k


def _guesses(inst: IPInstance, x: BrickVector, rho: int, radius: int) -> Iterator[IntVector]:
    """Brick-0 guesses with norm <= radius that keep brick 0 in bounds, lexicographic"""
    t_B = inst.block_spec.t_B
    lo, hi = step_window(x.brick0, inst.lower[:t_B], inst.upper[:t_B], rho, radius)
    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def _is_ray(inst: IPInstance, g: BrickVector) -> bool:
    """Every coordinate g moves runs towards an infinite bound"""
    return any(g.flatten()) and all(
        (gj > 0 and hi is None) or (gj < 0 and lo is None) or gj == 0
        for gj, lo, hi in zip(g.flatten(), inst.lower, inst.upper)
    )


def _augment(
    inst: IPInstance, x: BrickVector, caps: ResolvedCaps, stats: SolveStats
) -> Tuple[BrickVector, bool]:
    """Run augmentation to a fixed point; returns (x, True) when an improving ray exists"""
    value = inst.objective(x)
    while True:
        best = None
        for rho in _rho_schedule(inst, x, caps.max_rho_exponent):
            for v in _guesses(inst, x, rho, caps.guess_radius):
                stats.guesses += 1
                found = best_step_dp(
                    inst, StepQuery(x, rho, caps.xi, v), caps.dp_state_budget, stats
                )
                if found is None or found[1] >= 0:
                    continue
                g, delta = found
                if _is_ray(inst, g):
                    logger.debug(f"Improving ray {g.flatten()} at rho={rho}")
                    return x, True
                key = (rho * delta, rho, g.flatten())
                if best is None or key < best[0]:
                    best = (key, rho, g, delta)
        if best is None:
            return x, False

        _, rho, g, delta = best
        candidate = x + g.scale(rho)
        new_value = inst.objective(candidate)
        if new_value >= value or not is_feasible(inst, candidate):
            raise InvariantViolationError(
                f"Augmentation step {stats.augmentation_steps + 1} did not improve "
                f"feasibly ({value} -> {new_value})"
            )
        x, value = candidate, new_value
        stats.augmentation_steps += 1
        system_logger.log_augmentation(stats.augmentation_steps, rho, value, rho * delta)
        if stats.augmentation_steps > caps.augmentation_step_budget:
            raise BudgetExceededError(
                f"More than {caps.augmentation_step_budget} augmentation steps",
                caps.augmentation_step_budget,
                partial=x,
            )


@log_function_calls(system_logger)
def solve(inst: IPInstance, caps: Optional[SolverCaps] = None) -> SolveResult:
    """
    Optimize inst by augmentation.

    Status is OPTIMAL only when the caps certify it, HEURISTIC otherwise.
    Running out of a budget returns BUDGET_EXCEEDED with the best feasible
    point reached so far, if any.
    """
    caps = caps or SolverCaps()
    stats = SolveStats()
    fallback = None
    if not inst.is_bounded() and (caps.xi is None or caps.guess_radius is None):
        fallback = estimate_guess_radius(inst.block_spec)
    resolved = resolve_caps(inst, caps, fallback)
    stats.xi, stats.guess_radius = resolved.xi, resolved.guess_radius

    x = clamped_origin(inst)
    try:
        if not is_feasible(inst, x):
            feasibility, start = phase_one(inst)
            feas_caps = resolve_caps(feasibility, caps, fallback)
            end, _ = _augment(feasibility, start, feas_caps, stats)
            stats.phase_one_objective = feasibility.objective(end)
            if stats.phase_one_objective > 0:
                return SolveResult(
                    SolveStatus.INFEASIBLE, stats=stats, certified=feas_caps.certified
                )
            x = strip_slacks(inst, end)
            if not is_feasible(inst, x):
                raise InvariantViolationError("Phase one ended at an infeasible point")
        x, unbounded = _augment(inst, x, resolved, stats)
    except BudgetExceededError as e:
        partial = e.partial if isinstance(e.partial, BrickVector) else None
        if partial is not None and partial.dimension != inst.cols:
            partial = None
        logger.warning(f"solve stopped: {e}")
        return SolveResult(
            SolveStatus.BUDGET_EXCEEDED,
            solution=partial,
            objective=inst.objective(partial) if partial is not None else None,
            stats=stats,
        )

    if unbounded:
        # an improving ray stays feasible at every rho
        return SolveResult(
            SolveStatus.UNBOUNDED,
            solution=x,
            objective=inst.objective(x),
            stats=stats,
            certified=True,
        )
    status = SolveStatus.OPTIMAL if resolved.certified else SolveStatus.HEURISTIC
    system_logger.solver_info(
        f"solve finished: {status.value}",
        {"objective": inst.objective(x), **stats.to_dict()},
    )
    return SolveResult(status, x, inst.objective(x), stats, resolved.certified)
