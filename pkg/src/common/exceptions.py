"""
Error types raised by the toolkit
Each maps to one failure kind of an operation; the CLI maps them to exit codes
"""

from typing import Any, Optional, Sequence


class BlockIPError(Exception):
    """Base class for all toolkit errors"""


class DimensionMismatchError(BlockIPError, ValueError):
    """Operands have incompatible shapes"""


class ArithmeticOverflowError(BlockIPError, ArithmeticError):
    """A dense product would leave the exact int64 range"""


class BudgetExceededError(BlockIPError):
    """A search exhausted its configured budget"""

    def __init__(self, message: str, budget: int, partial: Any = None):
        super().__init__(message)
        self.budget = budget
        self.partial = partial

    def __reduce__(self):
        # raised inside process-pool workers and re-raised in the parent
        return type(self), (str(self), self.budget, self.partial)


class NotInKernelError(BlockIPError, ValueError):
    """Vector expected in ker(M) is not"""


class IncompleteBasisError(BlockIPError):
    """Graver decomposition stalled: the basis is not complete for the vector"""


class InfeasibleAtXiError(BlockIPError):
    """No bounded decomposition step exists at the given cap"""

    def __init__(self, message: str, xi: int):
        super().__init__(message)
        self.xi = xi


class JobsNotRepresentableError(BlockIPError):
    """An add-on brick is not among the recorded job kinds"""


class PreconditionViolationError(BlockIPError, ValueError):
    """Input violates an operation precondition"""


class CounterexampleFoundError(BlockIPError):
    """A certificate search found a vector violating the claimed bound"""

    def __init__(self, message: str, vector: Sequence[int]):
        super().__init__(message)
        self.vector = tuple(vector)


class InstanceParseError(BlockIPError, ValueError):
    """A document failed to parse; position is a line/column or a field path"""

    def __init__(self, message: str, position: Optional[str] = None):
        super().__init__(f"{position}: {message}" if position else message)
        self.position = position


class InvariantViolationError(BlockIPError, AssertionError):
    """A result failed its post-hoc invariant check"""
