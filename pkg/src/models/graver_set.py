from dataclasses import dataclass
from typing import FrozenSet, Optional, List, Dict, Any

from ..common.enums import GraverMethod
from .small_matrix import SmallMatrix, IntVector


@dataclass(frozen=True)
class GraverSet:
    """Finite set of kernel vectors closed under negation, with provenance"""

    matrix: SmallMatrix
    elements: FrozenSet[IntVector]
    method: GraverMethod
    certified_complete: bool
    radius: Optional[int] = None  # enumeration radius, None for completion

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return tuple(g) in self.elements

    @property
    def max_norm(self) -> int:
        return max((max(abs(v) for v in g) for g in self.elements), default=0)

    def sorted_elements(self) -> List[IntVector]:
        """Deterministic order: by 1-norm, then lexicographically"""
        return sorted(self.elements, key=lambda g: (sum(abs(v) for v in g), g))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "matrix": self.matrix.to_dict(),
            "elements": [list(g) for g in self.sorted_elements()],
            "method": self.method.value,
            "certified_complete": self.certified_complete,
            "radius": self.radius,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GraverSet":
        """Create from dictionary"""
        return cls(
            matrix=SmallMatrix.from_dict(data["matrix"]),
            elements=frozenset(tuple(g) for g in data["elements"]),
            method=GraverMethod(data["method"]),
            certified_complete=data.get("certified_complete", False),
            radius=data.get("radius"),
        )
