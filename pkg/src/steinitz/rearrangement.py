"""
Steinitz rearrangement

Reorders x_1..x_m (dimension kappa, infinity-norm <= zeta, sum x) so that
every prefix stays within kappa*zeta of ((l - kappa)/m) * x.

The exact construction walks k = m, m-1, ..., kappa+1 keeping weights
lambda in [0,1] on the surviving index set S_k with

    sum(lambda_i * x_i) = ((k - kappa)/m) * x,   sum(lambda_i) = k - kappa.

Scaling lambda to the next level and pivoting towards a vertex of that
polytope always zeroes some weight; that index becomes position k.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..common.enums import SteinitzMethod
from ..common.exceptions import DimensionMismatchError, PreconditionViolationError
from ..models.small_matrix import IntVector
from ..models.sequence_models import RearrangementResult

logger = logging.getLogger(__name__)


def as_vectors(vectors: Sequence) -> List[IntVector]:
    """Accept bare integers as 1-dimensional vectors"""
    out = [tuple(v) if isinstance(v, (tuple, list)) else (int(v),) for v in vectors]
    if len({len(v) for v in out}) > 1:
        raise DimensionMismatchError("Vectors have different dimensions")
    return out


def prefix_deviation(
    vectors: Sequence[Sequence[int]], permutation: Sequence[int], kappa: int
) -> Fraction:
    """max over l = 1..m of ||sum_{i<=l} x_pi(i) - ((l - kappa)/m) x||_inf, exactly"""
    m = len(vectors)
    if m == 0:
        return Fraction(0)
    dim = len(vectors[0])
    total = [sum(v[j] for v in vectors) for j in range(dim)]
    prefix = [0] * dim
    worst = Fraction(0)
    for ell, idx in enumerate(permutation, start=1):
        for j in range(dim):
            prefix[j] += vectors[idx][j]
        scale = Fraction(ell - kappa, m)
        for j in range(dim):
            worst = max(worst, abs(prefix[j] - scale * total[j]))
    return worst


def _nullspace_vector(matrix: List[List[Fraction]]) -> List[Fraction]:
    """A nonzero solution of matrix . d = 0 for a matrix with more columns than rows"""
    rows = [list(r) for r in matrix]
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        lead = rows[r][c]
        rows[r] = [a / lead for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = next(c for c in range(ncols) if c not in pivots)
    d = [Fraction(0)] * ncols
    d[free] = Fraction(1)
    for i, c in enumerate(pivots):
        d[c] = -rows[i][free]
    return d


def _max_step(
    cols: List[int], direction: List[Fraction], weights: dict
) -> Tuple[Fraction, bool]:
    """Largest t keeping weights + t*direction in [0,1]; flags a weight reaching 0"""
    step: Optional[Fraction] = None
    hits_zero = False
    for i, di in zip(cols, direction):
        if di > 0:
            limit, to_zero = (1 - weights[i]) / di, False
        elif di < 0:
            limit, to_zero = weights[i] / -di, True
        else:
            continue
        if step is None or limit < step:
            step, hits_zero = limit, to_zero
        elif limit == step:
            hits_zero = hits_zero or to_zero
    return step, hits_zero


def _drop_index(
    vectors: List[IntVector],
    alive: List[int],
    weights: dict,
    kappa: int,
) -> int:
    """
    Pivot `weights` (already scaled to the next level) until some weight is
    zero; return the smallest such index.
    """
    while True:
        zeros = [i for i in alive if weights[i] == 0]
        if zeros:
            return min(zeros)
        fractional = [i for i in alive if 0 < weights[i] < 1]
        if len(fractional) < kappa + 2:
            # a point of the polytope with at most kappa+1 fractional weights
            # and none zero cannot satisfy the weight-sum constraint
            raise PreconditionViolationError("Steinitz pivoting reached no zero weight")
        cols = fractional[: kappa + 2]
        system = [[Fraction(vectors[i][j]) for i in cols] for j in range(kappa)]
        system.append([Fraction(1)] * len(cols))
        d = _nullspace_vector(system)

        # of the two directions along d, prefer one whose blocking weight hits 0
        best: Optional[Tuple[bool, Fraction, List[Fraction]]] = None
        for direction in (d, [-a for a in d]):
            step, hits_zero = _max_step(cols, direction, weights)
            if best is None or (hits_zero and not best[0]):
                best = (hits_zero, step, direction)
        _, step, d = best
        for i, di in zip(cols, d):
            if di != 0:
                weights[i] = weights[i] + step * di
                # exact arithmetic lands on the bounds exactly
                if weights[i] < 0 or weights[i] > 1:
                    raise PreconditionViolationError("Pivot left the unit box")


def _line_walk_permutation(values: List[int]) -> Tuple[int, ...]:
    """
    One-dimensional construction with prefix deviation at most zeta.

    With c = x/m, keep S = sum(x_pi(i) - c); take an element above c while
    S <= 0 and one at most c while S > 0. Then S + c stays in [-zeta, zeta].
    Everything is scaled by m to stay in integers.
    """
    m = len(values)
    total = sum(values)
    above = [i for i in range(m) if values[i] * m > total]
    below = [i for i in range(m) if values[i] * m <= total]
    above.reverse()
    below.reverse()
    order: List[int] = []
    scaled = 0
    while above or below:
        if (scaled <= 0 and above) or not below:
            i = above.pop()
        else:
            i = below.pop()
        order.append(i)
        scaled += values[i] * m - total
    return tuple(order)


def _exact_permutation(vectors: List[IntVector], kappa: int) -> Tuple[int, ...]:
    m = len(vectors)
    if m <= kappa:
        return tuple(range(m))
    if kappa == 1:
        return _line_walk_permutation([v[0] for v in vectors])
    alive = list(range(m))
    weights = {i: Fraction(m - kappa, m) for i in alive}
    tail: List[int] = []
    for k in range(m, kappa, -1):
        factor = Fraction(k - 1 - kappa, k - kappa)
        for i in alive:
            weights[i] *= factor
        dropped = _drop_index(vectors, alive, weights, kappa)
        tail.append(dropped)
        alive.remove(dropped)
        del weights[dropped]
    # positions 1..kappa take the survivors; tail holds positions m, m-1, ...
    return tuple(sorted(alive)) + tuple(reversed(tail))


def _greedy_permutation(vectors: List[IntVector], kappa: int) -> Tuple[int, ...]:
    m = len(vectors)
    dim = len(vectors[0])
    total = [sum(v[j] for v in vectors) for j in range(dim)]
    remaining = list(range(m))
    prefix = [0] * dim
    order: List[int] = []
    for ell in range(1, m + 1):
        scale = Fraction(ell - kappa, m)

        def deviation(i: int) -> Tuple[Fraction, int]:
            return (
                max(
                    (abs(prefix[j] + vectors[i][j] - scale * total[j]) for j in range(dim)),
                    default=Fraction(0),
                ),
                i,
            )

        best = min(remaining, key=deviation)
        remaining.remove(best)
        order.append(best)
        for j in range(dim):
            prefix[j] += vectors[best][j]
    return tuple(order)


def steinitz_permute(
    vectors: Sequence, method: SteinitzMethod = SteinitzMethod.EXACT
) -> RearrangementResult:
    """
    Reorder `vectors` so every prefix deviation is at most kappa*zeta.

    The input order is kept when it already meets the bound. The greedy
    method is accepted only if its order passes the same check; otherwise
    the exact construction runs.
    """
    vecs = as_vectors(vectors)
    if not vecs:
        raise PreconditionViolationError("Steinitz rearrangement needs at least one vector")
    kappa = len(vecs[0])
    zeta = max((abs(a) for v in vecs for a in v), default=0)
    bound = kappa * zeta

    identity = tuple(range(len(vecs)))
    achieved = prefix_deviation(vecs, identity, kappa)
    if achieved <= bound:
        return RearrangementResult(identity, achieved, kappa, zeta, method)

    if method == SteinitzMethod.GREEDY:
        order = _greedy_permutation(vecs, kappa)
        achieved = prefix_deviation(vecs, order, kappa)
        if achieved <= bound:
            return RearrangementResult(order, achieved, kappa, zeta, SteinitzMethod.GREEDY)
        logger.debug(
            f"Greedy order deviates by {achieved} > {bound}; using exact construction"
        )

    order = _exact_permutation(vecs, kappa)
    achieved = prefix_deviation(vecs, order, kappa)
    if achieved > bound:
        raise PreconditionViolationError(
            f"Rearrangement deviation {achieved} exceeds kappa*zeta = {bound}"
        )
    return RearrangementResult(order, achieved, kappa, zeta, SteinitzMethod.EXACT)
