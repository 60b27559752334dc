from dataclasses import dataclass, field
from typing import Optional, Dict, Any, List, Tuple

from ..common.enums import LowerBoundFamily, CertificateMethod
from .brick_vector import BrickVector


@dataclass
class LowerBoundCertificate:
    """
    Certifies that no nonzero kernel vector has infinity-norm below
    `min_norm_verified`. The witness attains the bound when one was found.
    """

    family: Optional[LowerBoundFamily]
    n: int
    t: Optional[int]
    witness: Optional[BrickVector]
    min_norm_verified: int
    method: CertificateMethod
    # divisibility method: (i, y_i) over brick 0 of the witness, (n-1)*y_i = n*y_{i+1}
    chain: List[Tuple[int, int]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "family": self.family.value if self.family else None,
            "n": self.n,
            "t": self.t,
            "witness": self.witness.to_dict() if self.witness else None,
            "min_norm_verified": self.min_norm_verified,
            "method": self.method.value,
            "chain": [list(step) for step in self.chain],
        }
