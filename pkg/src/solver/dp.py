"""
Dynamic program over bricks

With brick 0 fixed to v, the remaining problem is an n-fold system:
every brick z^i solves A z^i = -B v inside its own box, and the bricks are
coupled only through sum_i D z^i = -C v. The DP walks the bricks in order
with the running D-sum as state.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..blockmat import apply, view_blocks
from ..common.enums import MatrixKind
from ..common.exceptions import BudgetExceededError
from ..config.settings import config_manager
from ..graver.enumeration import enumerate_box
from ..models.small_matrix import SmallMatrix, IntVector
from ..models.four_block_spec import FourBlockSpec
from ..models.brick_vector import BrickVector
from ..models.ip_instance import IPInstance
from ..models.solve_models import StepQuery, SolveStats

logger = logging.getLogger(__name__)

Window = Tuple[IntVector, IntVector]
BrickCost = Callable[[int, IntVector], int]


@lru_cache(maxsize=4096)
def fiber_points(
    A: SmallMatrix, rhs: IntVector, lower: IntVector, upper: IntVector
) -> Tuple[IntVector, ...]:
    """Integer points of {z : A z = rhs, lower <= z <= upper}, memoized by window"""
    return tuple(enumerate_box(A, rhs, lower, upper))


def brick_dp(
    spec: FourBlockSpec,
    v: Sequence[int],
    windows: Sequence[Window],
    cost: BrickCost,
    kind: MatrixKind = MatrixKind.H,
    state_budget: Optional[int] = None,
    stats: Optional[SolveStats] = None,
) -> Optional[Tuple[int, Tuple[IntVector, ...]]]:
    """
    Minimize sum_i cost(i, z^i) over bricks z^1..z^n with z^i in
    windows[i-1], A z^i = -B v and sum_i D z^i = -C v.

    cost receives the 1-based brick index. Returns (cost, bricks) or None
    when no choice exists. Among equal costs the lexicographically smallest
    brick sequence wins.
    """
    if state_budget is None:
        state_budget = config_manager.config.budgets.dp_state_budget
    A, B, C, D = view_blocks(spec, kind)
    v = tuple(v)
    rhs = tuple(-a for a in apply(B, v))
    target = tuple(-a for a in apply(C, v))
    s_C = D.rows

    stages: List[List[Tuple[IntVector, IntVector, int]]] = []
    for i, (lo, hi) in enumerate(windows, start=1):
        points = fiber_points(A, rhs, tuple(lo), tuple(hi))
        if not points:
            return None
        stages.append([(z, apply(D, z), cost(i, z)) for z in points])

    # reach[i]: per-row range of D-sums that stages i..n-1 can still add
    n = len(stages)
    reach_lo = [[0] * s_C for _ in range(n + 1)]
    reach_hi = [[0] * s_C for _ in range(n + 1)]
    for i in reversed(range(n)):
        for r in range(s_C):
            values = [dz[r] for _, dz, _ in stages[i]]
            reach_lo[i][r] = reach_lo[i + 1][r] + min(values)
            reach_hi[i][r] = reach_hi[i + 1][r] + max(values)

    states: Dict[IntVector, Tuple[int, Tuple[IntVector, ...]]] = {(0,) * s_C: (0, ())}
    visited = 0
    for i, stage in enumerate(stages):
        lo_next, hi_next = reach_lo[i + 1], reach_hi[i + 1]
        nxt: Dict[IntVector, Tuple[int, Tuple[IntVector, ...]]] = {}
        for state, (acc, path) in states.items():
            for z, dz, cz in stage:
                new_state = tuple(a + b for a, b in zip(state, dz))
                if any(
                    not lo_next[r] <= target[r] - new_state[r] <= hi_next[r]
                    for r in range(s_C)
                ):
                    continue
                entry = (acc + cz, path + (z,))
                old = nxt.get(new_state)
                if old is None or entry < old:
                    nxt[new_state] = entry
        visited += len(nxt)
        if visited > state_budget:
            raise BudgetExceededError(
                f"Brick DP stored more than {state_budget} states", state_budget
            )
        states = nxt
        if not states:
            return None

    if stats is not None:
        stats.dp_states += visited
        stats.dp_calls += 1
    return states.get(target)


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def step_window(
    x: Sequence[int],
    lower: Sequence[Optional[int]],
    upper: Sequence[Optional[int]],
    rho: int,
    xi: int,
) -> Window:
    """Per-coordinate range of g with |g| <= xi and lower <= x + rho*g <= upper"""
    lo, hi = [], []
    for xj, lj, uj in zip(x, lower, upper):
        lo.append(max(-xi, _ceil_div(lj - xj, rho)) if lj is not None else -xi)
        hi.append(min(xi, (uj - xj) // rho) if uj is not None else xi)
    return tuple(lo), tuple(hi)


def best_step_dp(
    inst: IPInstance,
    q: StepQuery,
    state_budget: Optional[int] = None,
    stats: Optional[SolveStats] = None,
) -> Optional[Tuple[BrickVector, int]]:
    """
    The step g minimizing w.g among g with g0 = guess, ||g||_inf <= xi,
    H g = 0 and lower <= base + rho*g <= upper. Returns (g, w.g) or None.
    """
    spec = inst.block_spec
    t_B, t_A = spec.t_B, spec.t_A
    v = tuple(q.guess) if q.guess is not None else (0,) * t_B
    x = q.base.flatten()

    lo0, hi0 = step_window(x[:t_B], inst.lower[:t_B], inst.upper[:t_B], q.rho, q.xi)
    if any(not lo <= a <= hi for a, lo, hi in zip(v, lo0, hi0)):
        return None

    windows = []
    for i in range(spec.n):
        sl = slice(t_B + i * t_A, t_B + (i + 1) * t_A)
        windows.append(step_window(x[sl], inst.lower[sl], inst.upper[sl], q.rho, q.xi))

    def cost(i: int, z: IntVector) -> int:
        w = inst.w[t_B + (i - 1) * t_A : t_B + i * t_A]
        return sum(a * b for a, b in zip(w, z))

    found = brick_dp(spec, v, windows, cost, MatrixKind.H, state_budget, stats)
    if found is None:
        return None
    brick_cost, bricks = found
    delta = sum(a * b for a, b in zip(inst.w[:t_B], v)) + brick_cost
    return BrickVector(v, bricks), delta
