"""
Heuristic step radius from measured Graver norms
"""

import logging
import math
from typing import Dict, Optional

import numpy as np

from ..blockmat import assemble
from ..common.exceptions import BudgetExceededError
from ..models.four_block_spec import FourBlockSpec
from ..graver.completion import graver_complete

logger = logging.getLogger(__name__)

SAMPLE_SIZES = (2, 3, 4)


def _measured_norm(spec: FourBlockSpec, element_budget: int) -> int:
    try:
        basis = graver_complete(assemble(spec), element_budget)
    except BudgetExceededError as e:
        # a partial basis still gives a lower estimate of the norm
        basis = e.partial
        if basis is None:
            return 1
    return max(basis.max_norm, 1)


def measured_norms(
    spec: FourBlockSpec, element_budget: int = 20_000
) -> Dict[int, int]:
    """Graver infinity-norms of H at the sample brick counts"""
    return {n: _measured_norm(spec.with_n(n), element_budget) for n in SAMPLE_SIZES}


def estimate_guess_radius(
    spec: FourBlockSpec, element_budget: int = 20_000, norms: Optional[Dict[int, int]] = None
) -> int:
    """
    Fit norm ~ a * n^p on the sample sizes (least squares in log-log) and
    evaluate at spec.n. Sizes inside the sample are measured directly.
    A single-brick spec has no growth in n and is measured as is.
    """
    if spec.n == 1 and spec.t_B == 0:
        return _measured_norm(spec, element_budget)
    if norms is None:
        if spec.n in SAMPLE_SIZES:
            return _measured_norm(spec, element_budget)
        norms = measured_norms(spec, element_budget)

    sizes = sorted(norms)
    slope, intercept = np.polyfit(
        np.log(np.array(sizes, dtype=float)),
        np.log(np.array([norms[n] for n in sizes], dtype=float)),
        1,
    )
    predicted = math.exp(intercept + slope * math.log(spec.n))
    radius = max(1, math.ceil(predicted - 1e-9), max(norms.values()))
    logger.debug(f"Guess radius fit: norms {norms}, slope {slope:.3f}, radius {radius}")
    return radius
