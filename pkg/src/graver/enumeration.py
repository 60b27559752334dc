"""
Bounded enumeration of integer points of {x : M x = rhs, lower <= x <= upper}

Depth-first over coordinates; before each coordinate is fixed, its value
range is narrowed so that every row can still be completed by the
remaining coordinates.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional, Sequence, Tuple

from ..common import system_logger, log_function_calls
from ..common.enums import GraverMethod
from ..common.exceptions import BudgetExceededError, PreconditionViolationError
from ..config.settings import config_manager
from ..models.small_matrix import SmallMatrix, IntVector
from ..models.graver_set import GraverSet
from .order import minimal_elements

logger = logging.getLogger(__name__)


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _suffix_ranges(
    columns: Sequence[IntVector],
    rows: int,
    lower: Sequence[int],
    upper: Sequence[int],
) -> Tuple[List[List[int]], List[List[int]]]:
    """Per row, the min and max contribution of coordinates j..end"""
    cols = len(columns)
    suf_min = [[0] * rows for _ in range(cols + 1)]
    suf_max = [[0] * rows for _ in range(cols + 1)]
    for j in reversed(range(cols)):
        for i in range(rows):
            a = columns[j][i]
            lo_c, hi_c = sorted((a * lower[j], a * upper[j]))
            suf_min[j][i] = suf_min[j + 1][i] + lo_c
            suf_max[j][i] = suf_max[j + 1][i] + hi_c
    return suf_min, suf_max


class _NodeCounter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"Enumeration visited more than {self.budget} nodes", self.budget
            )


def enumerate_box(
    M: SmallMatrix,
    rhs: Sequence[int],
    lower: Sequence[int],
    upper: Sequence[int],
    node_budget: Optional[int] = None,
) -> Iterator[IntVector]:
    """
    Yield every integer x with M x = rhs and lower <= x <= upper.

    Points come out in lexicographic order. Raises BudgetExceededError once
    more than `node_budget` partial assignments were visited.
    """
    if node_budget is None:
        node_budget = config_manager.config.budgets.enumeration_node_budget
    cols, rows = M.cols, M.rows
    if len(rhs) != rows or len(lower) != cols or len(upper) != cols:
        raise PreconditionViolationError("Box or right-hand side has wrong length")
    if any(lo > hi for lo, hi in zip(lower, upper)):
        return

    columns = M.columns
    suf_min, suf_max = _suffix_ranges(columns, rows, lower, upper)
    if any(not suf_min[0][i] <= rhs[i] <= suf_max[0][i] for i in range(rows)):
        return

    counter = _NodeCounter(node_budget)
    x = [0] * cols

    def descend(j: int, residual: List[int]) -> Iterator[IntVector]:
        if j == cols:
            yield tuple(x)
            return
        lo, hi = lower[j], upper[j]
        col = columns[j]
        nmin, nmax = suf_min[j + 1], suf_max[j + 1]
        for i in range(rows):
            a = col[i]
            if a > 0:
                lo = max(lo, _ceil_div(residual[i] - nmax[i], a))
                hi = min(hi, (residual[i] - nmin[i]) // a)
            elif a < 0:
                lo = max(lo, _ceil_div(nmin[i] - residual[i], -a))
                hi = min(hi, (nmax[i] - residual[i]) // -a)
        for v in range(lo, hi + 1):
            counter.tick()
            x[j] = v
            yield from descend(j + 1, [r - c * v for r, c in zip(residual, col)])
        x[j] = 0

    yield from descend(0, list(rhs))
    logger.debug(f"enumerate_box visited {counter.nodes} nodes")


def _kernel_slice(args) -> List[IntVector]:
    """Process-pool worker: kernel points of the box with the first coordinate fixed"""
    M, radius, first, node_budget = args
    lower = [first] + [-radius] * (M.cols - 1)
    upper = [first] + [radius] * (M.cols - 1)
    return [
        x
        for x in enumerate_box(M, (0,) * M.rows, lower, upper, node_budget)
        if any(x)
    ]


def kernel_points(
    M: SmallMatrix,
    radius: int,
    node_budget: Optional[int] = None,
    threads: Optional[int] = None,
) -> List[IntVector]:
    """All nonzero kernel vectors with infinity-norm at most radius"""
    if node_budget is None:
        node_budget = config_manager.config.budgets.enumeration_node_budget
    if threads is None:
        threads = config_manager.config.solver.threads

    if threads > 1 and M.cols > 1:
        # each slice gets an equal share, so the run never exceeds node_budget in total
        share = max(1, node_budget // (2 * radius + 1))
        slices = [(M, radius, v, share) for v in range(-radius, radius + 1)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            # map keeps submission order, so the merge is deterministic
            parts = list(pool.map(_kernel_slice, slices))
        return [x for part in parts for x in part]

    box = [radius] * M.cols
    return [
        x
        for x in enumerate_box(M, (0,) * M.rows, [-r for r in box], box, node_budget)
        if any(x)
    ]


@log_function_calls(system_logger)
def graver_enumerate(
    M: SmallMatrix,
    radius: int,
    asserted_bound: Optional[int] = None,
    node_budget: Optional[int] = None,
    threads: Optional[int] = None,
) -> GraverSet:
    """
    The ⊑-minimal nonzero kernel vectors of M with infinity-norm <= radius.

    The set is certified complete only when the caller asserts a Graver
    norm bound and radius reaches it.
    """
    if radius < 1:
        raise PreconditionViolationError(f"radius must be at least 1, got {radius}")

    start = time.perf_counter()
    points = kernel_points(M, radius, node_budget, threads)
    elements = frozenset(minimal_elements(points))

    system_logger.log_engine_run(
        GraverMethod.ENUMERATION.value,
        M.cols,
        len(elements),
        time.perf_counter() - start,
        {"radius": radius, "kernel_points": len(points)},
    )
    return GraverSet(
        matrix=M,
        elements=elements,
        method=GraverMethod.ENUMERATION,
        certified_complete=asserted_bound is not None and radius >= asserted_bound,
        radius=radius,
    )
