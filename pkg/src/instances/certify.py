"""
Minimum-norm certificates for kernel lattices
"""

import logging
from typing import List, Optional, Sequence, Tuple

from ..blockmat import assemble, in_kernel
from ..common import system_logger, log_function_calls
from ..common.enums import CertificateMethod, LowerBoundFamily, MatrixKind
from ..common.exceptions import (
    CounterexampleFoundError,
    InvariantViolationError,
    PreconditionViolationError,
)
from ..graver.enumeration import enumerate_box
from ..models.brick_vector import BrickVector
from ..models.four_block_spec import FourBlockSpec
from ..models.certificate import LowerBoundCertificate
from .families import gen_lower_3block, gen_lower_4block, witness_3block, witness_4block

logger = logging.getLogger(__name__)


def _safe_4block(t: int, n: int) -> Optional[FourBlockSpec]:
    try:
        return gen_lower_4block(t, n)
    except PreconditionViolationError:
        return None


def family_of(spec: FourBlockSpec) -> Optional[LowerBoundFamily]:
    """The generated family spec belongs to, if any"""
    if spec.n >= 2 and spec.t_A >= 2 and spec == _safe_4block(spec.t_A, spec.n):
        return LowerBoundFamily.FOUR_BLOCK
    if spec.n >= 2 and spec == gen_lower_3block(spec.n):
        return LowerBoundFamily.THREE_BLOCK
    return None


def _family_witness(spec: FourBlockSpec, family: Optional[LowerBoundFamily]):
    if family == LowerBoundFamily.FOUR_BLOCK:
        return witness_4block(spec.t_A, spec.n)
    if family == LowerBoundFamily.THREE_BLOCK:
        return witness_3block(spec.n)
    return None


def _divisibility_chain(witness: BrickVector) -> List[Tuple[int, int]]:
    """(i, y_i) over brick 0 of the family witness"""
    return list(enumerate(witness.brick0, start=1))


def replay_chain(chain: Sequence[Tuple[int, int]], n: int) -> bool:
    """
    Check every step (n-1)*y_i = n*y_{i+1} and that n^k divides y_{t-k}.

    Kernel vectors of the 4-block family satisfy the same steps, and with
    gcd(n, n-1) = 1 they force n^(t-1) | y_1, so no nonzero one is shorter.
    """
    t = len(chain)
    if [i for i, _ in chain] != list(range(1, t + 1)) or not chain[0][1]:
        return False
    steps = all((n - 1) * a == n * b for (_, a), (_, b) in zip(chain, chain[1:]))
    return steps and all(y % n ** (t - i) == 0 for i, y in chain)


@log_function_calls(system_logger)
def certify_min_norm(
    spec: FourBlockSpec,
    bound: int,
    method: CertificateMethod = CertificateMethod.EXHAUSTIVE,
    node_budget: Optional[int] = None,
) -> LowerBoundCertificate:
    """
    Certify that no nonzero kernel vector of H has infinity-norm below bound.

    EXHAUSTIVE enumerates the kernel box of radius bound-1. DIVISIBILITY
    replays the divisibility chain of the 4-block family, which certifies
    n^(t-1). A vector below the bound raises CounterexampleFoundError.
    """
    if bound < 1:
        raise PreconditionViolationError(f"bound must be at least 1, got {bound}")
    family = family_of(spec)
    witness = _family_witness(spec, family)
    t = spec.t_A if family == LowerBoundFamily.FOUR_BLOCK else None

    if method == CertificateMethod.DIVISIBILITY:
        if family != LowerBoundFamily.FOUR_BLOCK:
            raise PreconditionViolationError(
                "The divisibility certificate only applies to the 4-block family"
            )
        certified = spec.n ** (spec.t_A - 1)
        if witness.norm_inf() != certified or not in_kernel(spec, witness):
            raise InvariantViolationError("Family witness does not attain n^(t-1)")
        if bound > certified:
            raise CounterexampleFoundError(
                f"Kernel vector of norm {certified} lies below {bound}", witness.flatten()
            )
        chain = _divisibility_chain(witness)
        if not replay_chain(chain, spec.n):
            raise InvariantViolationError(f"Divisibility chain {chain} does not replay")
        return LowerBoundCertificate(family, spec.n, t, witness, certified, method, chain)

    if bound > 1:
        H = assemble(spec, MatrixKind.H)
        radius = bound - 1
        box = [radius] * H.cols
        for y in enumerate_box(H, (0,) * H.rows, [-r for r in box], box, node_budget):
            if any(y):
                raise CounterexampleFoundError(
                    f"Nonzero kernel vector of norm {max(abs(a) for a in y)} < {bound}", y
                )
    if witness is not None and not in_kernel(spec, witness):
        raise InvariantViolationError("Family witness is not a kernel vector")
    logger.debug(f"certify_min_norm: no nonzero kernel vector below {bound}")
    return LowerBoundCertificate(family, spec.n, t, witness, bound, method)


def min_kernel_norm(
    spec: FourBlockSpec, max_bound: int, node_budget: Optional[int] = None
) -> Optional[int]:
    """Least infinity-norm of a nonzero kernel vector, searched up to max_bound"""
    H = assemble(spec, MatrixKind.H)
    for radius in range(1, max_bound + 1):
        box = [radius] * H.cols
        for y in enumerate_box(H, (0,) * H.rows, [-radius] * H.cols, box, node_budget):
            if any(y):
                return radius
    return None


def attained(certificate: LowerBoundCertificate) -> bool:
    """The bound is tight: the witness is a kernel vector of exactly that norm"""
    witness = certificate.witness
    return witness is not None and witness.norm_inf() == certificate.min_norm_verified
