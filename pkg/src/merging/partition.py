"""
Merging: partition bounded vectors summing to x into small subsets whose
sums conform to x

Both partitioners work on an orthant-normalized copy (every coordinate of
the total made nonnegative) and repeatedly extract a conformal subset T of
the remaining vectors, i.e. 0 <= sum_T <= remaining total coordinate-wise.
Removing T keeps the remaining total in the same orthant, so every
extracted sum conforms to the original total.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..common.enums import MergeMode
from ..common.exceptions import InvariantViolationError, PreconditionViolationError
from ..graver.order import conforms
from ..models.small_matrix import IntVector
from ..models.sequence_models import SignPartition
from ..steinitz import steinitz_permute, prefix_collision, as_vectors

logger = logging.getLogger(__name__)


def _normalize_orthant(vectors: List[IntVector]) -> Tuple[List[IntVector], IntVector]:
    """Flip coordinates whose total is negative; returns (vectors, total)"""
    dim = len(vectors[0])
    total = [sum(v[h] for v in vectors) for h in range(dim)]
    flip = [-1 if t < 0 else 1 for t in total]
    flipped = [tuple(f * a for f, a in zip(flip, v)) for v in vectors]
    return flipped, tuple(f * t for f, t in zip(flip, total))


def _subset_sum(vectors: Sequence[IntVector], subset) -> IntVector:
    dim = len(vectors[0])
    return tuple(sum(vectors[i][h] for i in subset) for h in range(dim))


def _is_conformal(window_sum: Sequence[int], remaining_total: Sequence[int]) -> bool:
    return all(0 <= s <= t for s, t in zip(window_sum, remaining_total))


def verify_partition(
    vectors: Sequence[Sequence[int]], partition: SignPartition
) -> bool:
    """Disjoint cover of all indices, and every subset sum ⊑ total"""
    vecs = as_vectors(vectors)
    seen = set()
    for T in partition.subsets:
        if seen & T:
            return False
        seen |= T
    if seen != set(range(len(vecs))):
        return False
    dim = len(vecs[0])
    total = tuple(sum(v[h] for v in vecs) for h in range(dim))
    return all(conforms(_subset_sum(vecs, T), total) for T in partition.subsets)


def _check(vectors: List[IntVector], partition: SignPartition):
    if not verify_partition(vectors, partition):
        raise InvariantViolationError("Merged subsets are not a conformal partition")


# -- one dimension ---------------------------------------------------------


def merge_1d(ints: Sequence[int]) -> SignPartition:
    """
    Partition integers into subsets of size <= 6*zeta + 2 whose sums share
    the sign of the total (and do not exceed it in absolute value).
    """
    original = [int(v) for v in ints]
    values = list(original)
    if not values:
        raise PreconditionViolationError("merge_1d needs at least one integer")
    zeta = max(abs(v) for v in values)
    total = sum(values)
    sign = -1 if total < 0 else 1
    values = [sign * v for v in values]
    limit = 6 * zeta + 2
    head = 3 * zeta + 2

    remaining = list(range(len(values)))
    subsets: List[frozenset] = []
    while len(remaining) > limit:
        rem_total = sum(values[i] for i in remaining)
        order = steinitz_permute([values[i] for i in remaining]).permutation
        ordered = [remaining[k] for k in order]
        m = len(ordered)

        if (3 * zeta + 1) * rem_total > zeta * m:
            # the first 3*zeta+2 numbers already sum to something in [0, rem_total]
            T = ordered[:head]
        else:
            # prefixes 1..3*zeta+2 lie in [-zeta, 2*zeta]: two must collide
            hit = prefix_collision([values[i] for i in ordered[:head]], 2 * zeta)
            if hit is None:
                raise InvariantViolationError("No prefix collision among bounded prefixes")
            T = ordered[hit[0] : hit[1]]

        window_sum = sum(values[i] for i in T)
        if not 0 <= window_sum <= rem_total:
            raise InvariantViolationError(
                f"Extracted subset sums to {window_sum}, outside [0, {rem_total}]"
            )
        subsets.append(frozenset(T))
        taken = set(T)
        remaining = [i for i in remaining if i not in taken]

    if remaining:
        subsets.append(frozenset(remaining))

    if any(len(T) > limit for T in subsets):
        raise InvariantViolationError(f"A merged subset exceeds 6*zeta+2 = {limit}")
    partition = SignPartition(tuple(subsets), zeta, 1, MergeMode.ONE_DIM)
    _check([(v,) for v in original], partition)
    return partition


# -- several dimensions ----------------------------------------------------


def _window_if_conformal(
    vectors: List[IntVector],
    ordered: List[int],
    prefixes: List[IntVector],
    start: int,
    end: int,
    rem_total: IntVector,
) -> Optional[List[int]]:
    if end <= start:
        return None
    window = tuple(a - b for a, b in zip(prefixes[end], prefixes[start]))
    if _is_conformal(window, rem_total):
        return ordered[start:end]
    return None


def _extract_conformal(
    vectors: List[IntVector],
    ordered: List[int],
    rem_total: IntVector,
    zeta: int,
    kappa: int,
) -> Tuple[List[int], str]:
    """
    One conformal subset of the (Steinitz-ordered) remaining vectors.

    Coordinates are assumed sorted so that rem_total is ascending. Tries, in
    order: zero-sum windows among the first (6*zeta+1)^kappa + kappa
    prefixes; for j = kappa..1 windows between prefixes kappa + t*mu_j whose
    projections onto the first j-1 coordinates collide; the prefix of length
    mu_1 + kappa; then any zero-sum window and finally the shortest conformal
    prefix (the whole remainder at worst).
    """
    m = len(ordered)
    prefixes: List[IntVector] = [(0,) * kappa]
    for i in ordered:
        prefixes.append(tuple(a + b for a, b in zip(prefixes[-1], vectors[i])))

    def first_collision(levels, width) -> Optional[Tuple[int, int]]:
        seen: Dict[IntVector, int] = {}
        for ell in levels:
            key = prefixes[ell][:width]
            if key in seen:
                return seen[key], ell
            seen[key] = ell
        return None

    threshold = 2 * zeta * m
    mu_top = (6 * zeta + 1) ** kappa + kappa
    if mu_top * rem_total[-1] <= threshold:
        hit = first_collision(range(kappa, min(mu_top, m) + 1), kappa)
        if hit:
            T = _window_if_conformal(vectors, ordered, prefixes, *hit, rem_total)
            if T:
                return T, "zero_window"

    for j in range(kappa, 0, -1):
        xj = rem_total[j - 1]
        if xj == 0:
            continue
        mu_j = threshold // xj + 1  # smallest mu with mu * x^j > 2*zeta*m
        steps = (6 * zeta + 1) ** (j - 1)
        last = min(steps, (m - kappa) // mu_j) if m >= kappa else -1
        levels = [kappa + t * mu_j for t in range(last + 1)]
        hit = first_collision(levels, j - 1)
        if hit:
            T = _window_if_conformal(vectors, ordered, prefixes, *hit, rem_total)
            if T:
                return T, f"projection_window_{j}"

    if rem_total[0] > 0:
        mu_1 = threshold // rem_total[0] + 1
        T = _window_if_conformal(
            vectors, ordered, prefixes, 0, min(mu_1 + kappa, m), rem_total
        )
        if T:
            return T, "leading_prefix"

    hit = first_collision(range(m + 1), kappa)
    if hit:
        T = _window_if_conformal(vectors, ordered, prefixes, *hit, rem_total)
        if T:
            return T, "any_zero_window"

    for ell in range(1, m + 1):
        T = _window_if_conformal(vectors, ordered, prefixes, 0, ell, rem_total)
        if T:
            return T, "shortest_prefix"
    return list(ordered), "remainder"


def measured_constant(max_size: int, zeta: int, kappa: int) -> Optional[float]:
    """Smallest c with max_size <= (c*zeta)^(kappa^2)"""
    if zeta == 0 or max_size == 0:
        return None
    return max_size ** (1.0 / (kappa * kappa)) / zeta


def merge_kd(vectors: Sequence[Sequence[int]]) -> SignPartition:
    """
    Partition vectors of common dimension kappa into conformal subsets.

    The measured constant c (max|T_j| = (c*zeta)^(kappa^2)) is recorded on
    the result rather than asserted.
    """
    original = as_vectors(vectors)
    if not original:
        raise PreconditionViolationError("merge_kd needs at least one vector")
    kappa = len(original[0])
    zeta = max((abs(a) for v in original for a in v), default=0)

    flipped, total = _normalize_orthant(original)
    # ascending by the total's entries, ties by coordinate index
    coord_order = sorted(range(kappa), key=lambda h: (total[h], h))
    work = [tuple(v[h] for h in coord_order) for v in flipped]

    remaining = list(range(len(work)))
    order = list(remaining)
    subsets: List[frozenset] = []
    rules: Dict[str, int] = {}
    while remaining:
        rem_total = tuple(sum(work[i][h] for i in remaining) for h in range(kappa))
        # the previous order is reused whenever it still meets the bound
        perm = steinitz_permute([work[i] for i in order]).permutation
        ordered = [order[k] for k in perm]

        T, rule = _extract_conformal(work, ordered, rem_total, zeta, kappa)
        rules[rule] = rules.get(rule, 0) + 1
        subsets.append(frozenset(T))
        taken = set(T)
        remaining = [i for i in remaining if i not in taken]
        order = [i for i in ordered if i not in taken]

    max_size = max(len(T) for T in subsets)
    partition = SignPartition(
        tuple(subsets),
        zeta,
        kappa,
        MergeMode.MULTI_DIM,
        constant=measured_constant(max_size, zeta, kappa),
    )
    logger.debug(f"merge_kd extracted {len(subsets)} subsets, rules {rules}")
    _check(original, partition)
    return partition
