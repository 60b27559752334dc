"""
System and Block-IP Enums
Defines all enum types for the toolkit
"""

from enum import Enum


# System Logging Enums
class LogComponent(Enum):
    """Log component types"""

    APP = "app"
    GRAVER = "graver"
    SOLVER = "solver"
    STRUCTURE = "structure"
    CLI = "cli"
    ERROR = "error"
    PERFORMANCE = "performance"


# Block matrix enums
class MatrixKind(Enum):
    """Materialized views of a 4-block spec"""

    H = "H"  # full 4-block matrix
    H0 = "H0"  # C zeroed (3-block)
    E = "E"  # B and C zeroed (n-fold)
    F = "F"  # C and D zeroed (two-stage stochastic)


class GraverMethod(Enum):
    """How a Graver set was produced"""

    ENUMERATION = "enumeration"
    COMPLETION = "completion"


class SolveStatus(Enum):
    """Outcome of an optimization run"""

    OPTIMAL = "optimal"
    HEURISTIC = "heuristic"  # optimal for the step set searched, caps uncertified
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    BUDGET_EXCEEDED = "budget_exceeded"


class QuantityType(Enum):
    """Per-coordinate classification of a brick against a threshold"""

    SMALL = "small"
    POS_LARGE = "pos_large"
    NEG_LARGE = "neg_large"


class CanonicalMarker(Enum):
    """Status of a canonical-set slot"""

    FOUND = "found"
    ZERO = "zero"
    INFEASIBLE = "infeasible"


class LowerBoundFamily(Enum):
    """Generated lower-bound instance families"""

    FOUR_BLOCK = "four_block"
    THREE_BLOCK = "three_block"


class CertificateMethod(Enum):
    """How a minimum-norm certificate was established"""

    EXHAUSTIVE = "exhaustive"
    DIVISIBILITY = "divisibility"


class SteinitzMethod(Enum):
    """Rearrangement strategy"""

    EXACT = "exact"
    GREEDY = "greedy"


class MergeMode(Enum):
    """Cardinality regime of a sign partition"""

    ONE_DIM = "1d"
    MULTI_DIM = "kd"


class ExitCode(Enum):
    """CLI process exit codes"""

    OK = 0
    INVARIANT_VIOLATION = 1
    BUDGET = 2
    PARSE_ERROR = 3
