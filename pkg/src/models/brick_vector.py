from dataclasses import dataclass
from typing import Tuple, Sequence, Dict, Any

from ..common.exceptions import DimensionMismatchError
from .small_matrix import IntVector


@dataclass(frozen=True)
class BrickVector:
    """
    Integer vector split into brick 0 (length t_B) and n bricks of length t_A.

    Brick numbering follows the block layout: `brick(0)` is brick0 and
    `brick(i)` for 1 <= i <= n is `bricks[i - 1]`.
    """

    brick0: IntVector
    bricks: Tuple[IntVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "brick0", tuple(int(v) for v in self.brick0))
        object.__setattr__(
            self, "bricks", tuple(tuple(int(v) for v in b) for b in self.bricks)
        )
        if self.bricks:
            width = len(self.bricks[0])
            if any(len(b) != width for b in self.bricks):
                raise DimensionMismatchError("Bricks have different lengths")

    @classmethod
    def zero(cls, t_B: int, t_A: int, n: int) -> "BrickVector":
        return cls((0,) * t_B, tuple((0,) * t_A for _ in range(n)))

    @classmethod
    def from_flat(cls, flat: Sequence[int], t_B: int, t_A: int, n: int) -> "BrickVector":
        """Split a flat vector of length t_B + n*t_A into bricks"""
        if len(flat) != t_B + n * t_A:
            raise DimensionMismatchError(
                f"Flat vector of length {len(flat)} does not split as "
                f"{t_B} + {n}*{t_A}"
            )
        flat = tuple(flat)
        return cls(
            flat[:t_B],
            tuple(flat[t_B + i * t_A : t_B + (i + 1) * t_A] for i in range(n)),
        )

    @property
    def n(self) -> int:
        return len(self.bricks)

    @property
    def t_B(self) -> int:
        return len(self.brick0)

    @property
    def t_A(self) -> int:
        return len(self.bricks[0]) if self.bricks else 0

    @property
    def dimension(self) -> int:
        return self.t_B + self.n * self.t_A

    def brick(self, i: int) -> IntVector:
        return self.brick0 if i == 0 else self.bricks[i - 1]

    def flatten(self) -> IntVector:
        return self.brick0 + tuple(v for b in self.bricks for v in b)

    def _check_shape(self, other: "BrickVector"):
        if (self.t_B, self.t_A, self.n) != (other.t_B, other.t_A, other.n):
            raise DimensionMismatchError("Brick vectors have different shapes")

    def __add__(self, other: "BrickVector") -> "BrickVector":
        self._check_shape(other)
        return BrickVector(
            tuple(a + b for a, b in zip(self.brick0, other.brick0)),
            tuple(
                tuple(a + b for a, b in zip(x, y))
                for x, y in zip(self.bricks, other.bricks)
            ),
        )

    def __neg__(self) -> "BrickVector":
        return self.scale(-1)

    def __sub__(self, other: "BrickVector") -> "BrickVector":
        return self + (-other)

    def scale(self, k: int) -> "BrickVector":
        return BrickVector(
            tuple(k * a for a in self.brick0),
            tuple(tuple(k * a for a in b) for b in self.bricks),
        )

    def replace_brick(self, i: int, values: Sequence[int]) -> "BrickVector":
        if i == 0:
            return BrickVector(tuple(values), self.bricks)
        bricks = list(self.bricks)
        bricks[i - 1] = tuple(values)
        return BrickVector(self.brick0, tuple(bricks))

    def norm_inf(self) -> int:
        return max((abs(v) for v in self.flatten()), default=0)

    def norm_1(self) -> int:
        return sum(abs(v) for v in self.flatten())

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.flatten())

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {"brick0": list(self.brick0), "bricks": [list(b) for b in self.bricks]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BrickVector":
        """Create from dictionary"""
        return cls(tuple(data["brick0"]), tuple(tuple(b) for b in data["bricks"]))
