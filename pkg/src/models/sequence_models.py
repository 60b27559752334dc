from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Optional, Dict, Any, FrozenSet

from ..common.enums import MergeMode, SteinitzMethod


@dataclass(frozen=True)
class RearrangementResult:
    """A Steinitz reordering and its measured prefix deviation"""

    permutation: Tuple[int, ...]  # 0-based indices into the input
    achieved_bound: Fraction
    kappa: int
    zeta: int
    method: SteinitzMethod = SteinitzMethod.EXACT

    @property
    def certified_bound(self) -> int:
        return self.kappa * self.zeta

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "permutation": list(self.permutation),
            "achieved_bound": str(self.achieved_bound),
            "kappa": self.kappa,
            "zeta": self.zeta,
            "method": self.method.value,
        }


@dataclass(frozen=True)
class SignPartition:
    """Disjoint cover of the input indices by subsets whose sums conform to the total"""

    subsets: Tuple[FrozenSet[int], ...]  # 0-based indices
    zeta: int
    kappa: int
    mode: MergeMode
    # measured c with max|T_j| <= (c*zeta)^(kappa^2); None in 1-D mode
    constant: Optional[float] = None

    @property
    def max_size(self) -> int:
        return max((len(T) for T in self.subsets), default=0)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "subsets": [sorted(T) for T in self.subsets],
            "zeta": self.zeta,
            "kappa": self.kappa,
            "mode": self.mode.value,
            "max_size": self.max_size,
            "constant": self.constant,
        }
