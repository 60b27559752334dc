"""
Centralization: spread the add-on jobs of every brick group evenly

Each nonzero brick of an add-on is one job; its kind is the brick vector.
Within a group the number of jobs of each kind is split as evenly as
possible, lower brick indices taking the extra ones.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..common.exceptions import JobsNotRepresentableError, PreconditionViolationError
from ..models.small_matrix import IntVector
from ..models.brick_vector import BrickVector
from ..models.structure_models import (
    BrickTypeAssignment,
    Centralization,
    SameOrthantDecomposition,
)

logger = logging.getLogger(__name__)


def job_kinds(addons: Sequence[BrickVector]) -> List[IntVector]:
    """Distinct nonzero add-on bricks, sorted"""
    return sorted({b for d in addons for b in d.bricks if any(b)})


def default_gamma(jobs: Sequence[IntVector]) -> int:
    """Sum of the jobs' infinity-norms, at least 1"""
    return max(1, sum(max((abs(a) for a in v), default=0) for v in jobs))


def _job_counts(
    addons: Sequence[BrickVector], jobs: Sequence[IntVector], n: int
) -> List[List[int]]:
    """counts[i-1][k]: jobs of kind k on brick i"""
    kind_of = {v: k for k, v in enumerate(jobs)}
    counts = [[0] * len(jobs) for _ in range(n)]
    for d in addons:
        if any(d.brick0):
            raise JobsNotRepresentableError(f"Add-on {d.flatten()} has a nonzero brick 0")
        for i, brick in enumerate(d.bricks):
            if not any(brick):
                continue
            if brick not in kind_of:
                raise JobsNotRepresentableError(f"Add-on brick {brick} is not a job kind")
            counts[i][kind_of[brick]] += 1
    return counts


def centralize(
    y: BrickVector,
    types: BrickTypeAssignment,
    decomposition: SameOrthantDecomposition,
    jobs: Optional[Sequence[IntVector]] = None,
) -> Centralization:
    total = BrickVector.zero(y.t_B, y.t_A, y.n)
    for part in decomposition.principals + decomposition.addons:
        total = total + part
    if total != y:
        raise PreconditionViolationError("Decomposition does not add up to y")

    jobs = list(jobs) if jobs is not None else job_kinds(decomposition.addons)
    counts = _job_counts(decomposition.addons, jobs, y.n)

    bricks = [list(b) for b in y.bricks]
    job_counts: Dict[Tuple[int, int], List[int]] = {}
    y_f: List[Tuple[Fraction, ...]] = [tuple()] * y.n
    for j, group in enumerate(types.groups):
        members = sorted(group)
        size = len(members)
        for k, job in enumerate(jobs):
            c = sum(counts[i - 1][k] for i in members)
            if c == 0:
                continue
            q, rem = divmod(c, size)
            spread = [q + 1 if pos < rem else q for pos in range(size)]
            job_counts[(j, k)] = spread
            for i, new in zip(members, spread):
                change = new - counts[i - 1][k]
                if change:
                    bricks[i - 1] = [a + change * v for a, v in zip(bricks[i - 1], job)]
        average = tuple(
            Fraction(sum(y.bricks[i - 1][h] for i in members), size) for h in range(y.t_A)
        )
        for i in members:
            y_f[i - 1] = average

    y_tilde = BrickVector(y.brick0, tuple(tuple(b) for b in bricks))
    result = Centralization(y_tilde, job_counts, jobs, y_f)
    logger.debug(
        f"centralize: {len(jobs)} job kinds, deviation {result.max_deviation()} "
        f"against bound {result.job_norm_sum}"
    )
    return result


def relocate_addons(
    addons: Sequence[BrickVector], types: BrickTypeAssignment, central: Centralization
) -> List[BrickVector]:
    """
    The add-ons with their jobs moved to the centralized counts.

    Principals plus the relocated add-ons sum to y_tilde. Jobs only move
    inside a group, so each relocated add-on keeps brick 0 at zero and its
    brick sum unchanged, and stays in ker(H0).
    """
    kind_of = {v: k for k, v in enumerate(central.jobs)}
    bricks = [[list(b) for b in d.bricks] for d in addons]
    # (brick, kind) -> add-ons holding one such job on that brick
    holders: Dict[Tuple[int, int], List[int]] = {}
    for a, d in enumerate(addons):
        for i, brick in enumerate(d.bricks, start=1):
            if any(brick):
                holders.setdefault((i, kind_of[brick]), []).append(a)

    for (j, k), spread in sorted(central.job_counts.items()):
        job = central.jobs[k]
        leaving: List[Tuple[int, int]] = []
        arriving: List[int] = []
        for i, target in zip(sorted(types.groups[j]), spread):
            have = holders.get((i, k), [])
            leaving += [(a, i) for a in have[target:]]
            arriving += [i] * max(target - len(have), 0)
        if len(leaving) != len(arriving):
            raise PreconditionViolationError(f"Job counts of kind {k} in group {j} do not balance")
        for (a, src), dst in zip(leaving, arriving):
            bricks[a][src - 1] = [x - v for x, v in zip(bricks[a][src - 1], job)]
            bricks[a][dst - 1] = [x + v for x, v in zip(bricks[a][dst - 1], job)]

    return [
        BrickVector(d.brick0, tuple(tuple(b) for b in moved))
        for d, moved in zip(addons, bricks)
    ]
