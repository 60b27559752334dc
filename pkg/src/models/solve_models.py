from dataclasses import dataclass, field
from typing import Optional, Dict, Any

from ..common.enums import SolveStatus
from ..common.exceptions import PreconditionViolationError
from .small_matrix import IntVector
from .brick_vector import BrickVector


@dataclass
class SolveStats:
    """Counters collected during one solver run"""

    augmentation_steps: int = 0
    dp_states: int = 0
    guesses: int = 0
    dp_calls: int = 0
    phase_one_objective: Optional[int] = None
    xi: Optional[int] = None
    guess_radius: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "augmentation_steps": self.augmentation_steps,
            "dp_states": self.dp_states,
            "guesses": self.guesses,
            "dp_calls": self.dp_calls,
            "phase_one_objective": self.phase_one_objective,
            "xi": self.xi,
            "guess_radius": self.guess_radius,
        }


@dataclass
class SolveResult:
    """Outcome of brute_solve or solve"""

    status: SolveStatus
    solution: Optional[BrickVector] = None
    objective: Optional[int] = None
    stats: SolveStats = field(default_factory=SolveStats)
    certified: bool = False

    @property
    def is_feasible(self) -> bool:
        return self.status in (SolveStatus.OPTIMAL, SolveStatus.HEURISTIC)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "status": self.status.value,
            "solution": list(self.solution.flatten()) if self.solution else None,
            "objective": self.objective,
            "stats": self.stats.to_dict(),
            "certified": self.certified,
        }


@dataclass(frozen=True)
class StepQuery:
    """One call of the bounded-step oracle: x0 + rho*g with ||g|| <= xi and g0 = guess"""

    base: BrickVector
    rho: int
    xi: int
    guess: Optional[IntVector] = None

    def __post_init__(self):
        if self.rho < 1 or self.rho & (self.rho - 1):
            raise PreconditionViolationError(f"rho must be a power of two, got {self.rho}")
        if self.xi < 1:
            raise PreconditionViolationError(f"xi must be at least 1, got {self.xi}")


@dataclass(frozen=True)
class SolverCaps:
    """
    Search caps for solve().

    Leaving xi or guess_radius unset on a finitely bounded instance picks
    the widest box width, which covers every feasible step and certifies
    optimality. Explicit caps below that width make results heuristic.
    """

    xi: Optional[int] = None
    guess_radius: Optional[int] = None
    max_rho_exponent: Optional[int] = None
    dp_state_budget: Optional[int] = None
    augmentation_step_budget: Optional[int] = None
    threads: Optional[int] = None
