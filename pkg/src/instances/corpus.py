"""
Seeded random 4-block instances for oracle testing
"""

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from ..blockmat import apply, assemble
from ..common.exceptions import PreconditionViolationError
from ..models.small_matrix import SmallMatrix
from ..models.four_block_spec import FourBlockSpec
from ..models.ip_instance import IPInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusParams:
    """Ranges of a random corpus; entries, bounds and weights are symmetric around 0"""

    n_max: int = 4
    t_max: int = 2
    s_max: int = 1
    entry_range: int = 2
    bound_range: int = 3
    weight_range: int = 3
    planted_fraction: float = 0.5
    three_block_fraction: float = 0.25

    def __post_init__(self):
        if min(self.n_max, self.t_max, self.s_max) < 1:
            raise PreconditionViolationError("n_max, t_max and s_max must be at least 1")
        if not 0.0 <= self.planted_fraction <= 1.0:
            raise PreconditionViolationError("planted_fraction must lie in [0, 1]")


def _block(rng: np.random.Generator, rows: int, cols: int, r: int) -> SmallMatrix:
    values = rng.integers(-r, r + 1, rows * cols)
    return SmallMatrix(rows, cols, tuple(int(v) for v in values))


def random_instance(rng: np.random.Generator, params: CorpusParams) -> IPInstance:
    n = int(rng.integers(1, params.n_max + 1))
    t_A = int(rng.integers(1, params.t_max + 1))
    t_B = int(rng.integers(1, params.t_max + 1))
    s_A = int(rng.integers(1, params.s_max + 1))
    s_C = int(rng.integers(1, params.s_max + 1))
    three_block = bool(rng.random() < params.three_block_fraction)

    r = params.entry_range
    C = SmallMatrix.zeros(s_C, t_B) if three_block else _block(rng, s_C, t_B, r)
    spec = FourBlockSpec(
        A=_block(rng, s_A, t_A, r),
        B=_block(rng, s_A, t_B, r),
        C=C,
        D=_block(rng, s_C, t_A, r),
        n=n,
    )
    cols = spec.cols
    lower = tuple(int(v) for v in rng.integers(-params.bound_range, 1, cols))
    upper = tuple(int(v) for v in rng.integers(0, params.bound_range + 1, cols))
    wr = params.weight_range
    w = tuple(int(v) for v in rng.integers(-wr, wr + 1, cols))

    if rng.random() < params.planted_fraction:
        planted = tuple(int(rng.integers(lo, hi + 1)) for lo, hi in zip(lower, upper))
        b = apply(assemble(spec), planted)
    else:
        br = params.bound_range
        b = tuple(int(v) for v in rng.integers(-br, br + 1, spec.rows))
    return IPInstance(spec, b, lower, upper, w, three_block)


def random_corpus(seed: int, params: CorpusParams, count: int) -> List[IPInstance]:
    """count instances from np.random.default_rng(seed); same seed, same corpus"""
    rng = np.random.default_rng(seed)
    corpus = [random_instance(rng, params) for _ in range(count)]
    logger.debug(f"random_corpus(seed={seed}): {count} instances")
    return corpus
