from .small_matrix import SmallMatrix, IntVector
from .brick_vector import BrickVector
from .four_block_spec import FourBlockSpec
from .ip_instance import IPInstance, ExtendedBounds
from .graver_set import GraverSet
from .solve_models import SolveResult, SolveStats, StepQuery, SolverCaps
from .sequence_models import RearrangementResult, SignPartition
from .structure_models import (
    BoundedDecomposition,
    CanonicalEntry,
    SameOrthantDecomposition,
    BrickTypeAssignment,
    Centralization,
)
from .certificate import LowerBoundCertificate
from .file_models import (
    MatrixDocument,
    BlocksDocument,
    InstanceDocument,
    VectorsDocument,
    BasisDocument,
    ResultDocument,
)

__all__ = [
    "SmallMatrix",
    "IntVector",
    "BrickVector",
    "FourBlockSpec",
    "IPInstance",
    "ExtendedBounds",
    "GraverSet",
    "SolveResult",
    "SolveStats",
    "StepQuery",
    "SolverCaps",
    "RearrangementResult",
    "SignPartition",
    "BoundedDecomposition",
    "CanonicalEntry",
    "SameOrthantDecomposition",
    "BrickTypeAssignment",
    "Centralization",
    "LowerBoundCertificate",
    "MatrixDocument",
    "BlocksDocument",
    "InstanceDocument",
    "VectorsDocument",
    "BasisDocument",
    "ResultDocument",
]
