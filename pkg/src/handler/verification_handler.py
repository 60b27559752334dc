"""
Verification Handler
Recomputes the invariant verdicts embedded in every result document
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..blockmat import apply, in_kernel
from ..common.enums import MatrixKind, MergeMode, SolveStatus
from ..graver.order import conforms, minimal_elements
from ..instances.certify import replay_chain
from ..merging import verify_partition
from ..models.brick_vector import BrickVector
from ..models.certificate import LowerBoundCertificate
from ..models.four_block_spec import FourBlockSpec
from ..models.graver_set import GraverSet
from ..models.ip_instance import IPInstance
from ..models.sequence_models import RearrangementResult, SignPartition
from ..models.solve_models import SolveResult
from ..models.structure_models import BoundedDecomposition
from ..solver import constraint_matrix
from ..steinitz import as_vectors, prefix_deviation

logger = logging.getLogger(__name__)


class VerificationHandler:
    """
    Handler for post-hoc checks

    Every method returns named boolean verdicts; commands embed them in
    their result documents so downstream scripts need not recompute.
    """

    @staticmethod
    def graver_checks(basis: GraverSet) -> Dict[str, bool]:
        elements = basis.sorted_elements()
        zero = (0,) * basis.matrix.rows
        return {
            "in_kernel": all(apply(basis.matrix, g) == zero for g in elements),
            "nonzero": all(any(g) for g in elements),
            "symmetric": all(tuple(-a for a in g) in basis for g in elements),
            "minimal": len(minimal_elements(elements)) == len(elements),
        }

    @staticmethod
    def solve_checks(inst: IPInstance, result: SolveResult) -> Dict[str, bool]:
        if result.solution is None:
            # infeasible and out-of-budget runs carry no point to check
            checks = {
                "no_point_status": result.status
                in (SolveStatus.INFEASIBLE, SolveStatus.BUDGET_EXCEEDED)
            }
            if (
                result.status == SolveStatus.INFEASIBLE
                and result.stats.phase_one_objective is not None
            ):
                checks["phase_one_positive"] = result.stats.phase_one_objective > 0
            return checks
        flat = result.solution.flatten()
        return {
            "has_solution": True,
            "equations": apply(constraint_matrix(inst), flat) == inst.b,
            "bounds": inst.within_bounds(flat),
            "objective": inst.objective(result.solution) == result.objective,
        }

    @staticmethod
    def decomposition_checks(
        g: BrickVector, spec: FourBlockSpec, dec: BoundedDecomposition
    ) -> Dict[str, bool]:
        return {
            "sum": dec.total(g) == g,
            "in_kernel": all(in_kernel(spec, e, MatrixKind.H0) for e in dec.summands),
            "brick0_conformal": all(conforms(e.brick0, g.brick0) for e in dec.summands),
            "bounded": all(e.norm_inf() <= dec.xi for e in dec.summands),
        }

    @staticmethod
    def steinitz_checks(vectors: Sequence, result: RearrangementResult) -> Dict[str, bool]:
        vecs = as_vectors(vectors)
        achieved = prefix_deviation(vecs, result.permutation, result.kappa)
        return {
            "permutation": sorted(result.permutation) == list(range(len(vecs))),
            "deviation_recomputed": achieved == result.achieved_bound,
            "within_kappa_zeta": achieved <= Fraction(result.kappa * result.zeta),
        }

    @staticmethod
    def merge_checks(vectors: Sequence, partition: SignPartition) -> Dict[str, bool]:
        checks = {"conformal_partition": verify_partition(vectors, partition)}
        if partition.mode == MergeMode.ONE_DIM:
            checks["size_bound"] = partition.max_size <= 6 * partition.zeta + 2
        return checks

    @staticmethod
    def certificate_checks(
        spec: FourBlockSpec, certificate: LowerBoundCertificate
    ) -> Dict[str, bool]:
        witness: Optional[BrickVector] = certificate.witness
        if witness is None:
            return {"has_witness": False}
        checks = {
            "has_witness": True,
            "witness_in_kernel": in_kernel(spec, witness),
            "witness_nonzero": not witness.is_zero(),
        }
        if certificate.chain:
            checks["chain_replays"] = replay_chain(certificate.chain, certificate.n)
        return checks

    @staticmethod
    def kernel_parts_checks(
        y: BrickVector, spec: FourBlockSpec, parts: List[BrickVector]
    ) -> Dict[str, bool]:
        total = BrickVector.zero(y.t_B, y.t_A, y.n)
        for p in parts:
            total = total + p
        return {
            "sum": total == y,
            "in_kernel": all(in_kernel(spec, p, MatrixKind.H0) for p in parts),
            "conformal": all(conforms(p.flatten(), y.flatten()) for p in parts),
        }
