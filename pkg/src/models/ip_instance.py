from dataclasses import dataclass
from typing import Tuple, Optional, Union, Dict, Any

from ..common.exceptions import DimensionMismatchError, PreconditionViolationError
from .small_matrix import SmallMatrix, IntVector
from .four_block_spec import FourBlockSpec
from .brick_vector import BrickVector

# None stands for -inf in `lower` and +inf in `upper`
ExtendedBounds = Tuple[Optional[int], ...]


@dataclass(frozen=True)
class IPInstance:
    """
    min { w.x : H x = b, lower <= x <= upper, x integral }

    `constraint` is either a block spec or an explicit matrix; explicit
    matrices are solved as single-brick specs (see `block_spec`).
    """

    constraint: Union[FourBlockSpec, SmallMatrix]
    b: IntVector
    lower: ExtendedBounds
    upper: ExtendedBounds
    w: IntVector
    three_block: bool = False

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(v) for v in self.b))
        object.__setattr__(self, "w", tuple(int(v) for v in self.w))
        object.__setattr__(
            self, "lower", tuple(None if v is None else int(v) for v in self.lower)
        )
        object.__setattr__(
            self, "upper", tuple(None if v is None else int(v) for v in self.upper)
        )

        if self.three_block and not self.block_spec.is_three_block:
            raise PreconditionViolationError("three_block flag set but C is nonzero")
        rows, cols = self.rows, self.cols
        if len(self.b) != rows:
            raise DimensionMismatchError(f"b has length {len(self.b)}, expected {rows}")
        for name in ("lower", "upper", "w"):
            if len(getattr(self, name)) != cols:
                raise DimensionMismatchError(
                    f"{name} has length {len(getattr(self, name))}, expected {cols}"
                )
        for j, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if lo is not None and hi is not None and lo > hi:
                raise PreconditionViolationError(
                    f"lower[{j}]={lo} exceeds upper[{j}]={hi}"
                )

    @property
    def block_spec(self) -> FourBlockSpec:
        if isinstance(self.constraint, FourBlockSpec):
            return self.constraint
        return FourBlockSpec.from_matrix(self.constraint)

    @property
    def is_explicit(self) -> bool:
        return isinstance(self.constraint, SmallMatrix)

    @property
    def rows(self) -> int:
        return self.block_spec.rows

    @property
    def cols(self) -> int:
        return self.block_spec.cols

    def is_bounded(self) -> bool:
        return all(v is not None for v in self.lower + self.upper)

    def objective(self, x: BrickVector) -> int:
        return sum(wi * xi for wi, xi in zip(self.w, x.flatten()))

    def within_bounds(self, flat: IntVector) -> bool:
        return all(
            (lo is None or v >= lo) and (hi is None or v <= hi)
            for v, lo, hi in zip(flat, self.lower, self.upper)
        )

    def split(self, flat) -> BrickVector:
        spec = self.block_spec
        return BrickVector.from_flat(flat, spec.t_B, spec.t_A, spec.n)

    def replace(self, **changes) -> "IPInstance":
        data = {
            "constraint": self.constraint,
            "b": self.b,
            "lower": self.lower,
            "upper": self.upper,
            "w": self.w,
            "three_block": self.three_block,
        }
        data.update(changes)
        return IPInstance(**data)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        constraint = (
            {"matrix": self.constraint.to_dict()}
            if self.is_explicit
            else {"blocks": self.constraint.to_dict()}
        )
        return {
            **constraint,
            "b": list(self.b),
            "lower": list(self.lower),
            "upper": list(self.upper),
            "w": list(self.w),
            "three_block": self.three_block,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "IPInstance":
        """Create from dictionary"""
        if "matrix" in data:
            constraint = SmallMatrix.from_dict(data["matrix"])
        else:
            constraint = FourBlockSpec.from_dict(data["blocks"])
        return cls(
            constraint=constraint,
            b=tuple(data["b"]),
            lower=tuple(data["lower"]),
            upper=tuple(data["upper"]),
            w=tuple(data["w"]),
            three_block=data.get("three_block", False),
        )
