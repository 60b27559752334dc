"""
Common utilities and shared components
"""

from .system_logger import (
    system_logger,
    SystemLogger,
    log_function_calls,
)
from .enums import (
    LogComponent,
    MatrixKind,
    GraverMethod,
    SolveStatus,
    QuantityType,
    CanonicalMarker,
    LowerBoundFamily,
    CertificateMethod,
    SteinitzMethod,
    MergeMode,
    ExitCode,
)
from .constants import FileHeaders, BoundTokens, Defaults
from .exceptions import (
    BlockIPError,
    DimensionMismatchError,
    ArithmeticOverflowError,
    BudgetExceededError,
    NotInKernelError,
    IncompleteBasisError,
    InfeasibleAtXiError,
    JobsNotRepresentableError,
    PreconditionViolationError,
    CounterexampleFoundError,
    InstanceParseError,
    InvariantViolationError,
)

__all__ = [
    # Logger
    "system_logger",
    "SystemLogger",
    "log_function_calls",
    # Enums
    "LogComponent",
    "MatrixKind",
    "GraverMethod",
    "SolveStatus",
    "QuantityType",
    "CanonicalMarker",
    "LowerBoundFamily",
    "CertificateMethod",
    "SteinitzMethod",
    "MergeMode",
    "ExitCode",
    # Constants
    "FileHeaders",
    "BoundTokens",
    "Defaults",
    # Errors
    "BlockIPError",
    "DimensionMismatchError",
    "ArithmeticOverflowError",
    "BudgetExceededError",
    "NotInKernelError",
    "IncompleteBasisError",
    "InfeasibleAtXiError",
    "JobsNotRepresentableError",
    "PreconditionViolationError",
    "CounterexampleFoundError",
    "InstanceParseError",
    "InvariantViolationError",
]
