from dataclasses import dataclass
from functools import cached_property
from typing import Tuple, Sequence, Dict, Any, List

import numpy as np

from ..common.constants import Defaults
from ..common.exceptions import DimensionMismatchError, ArithmeticOverflowError

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class SmallMatrix:
    """Dense integer matrix with row-major entries (the blocks A, B, C, D)"""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(
                f"Negative shape {self.rows}x{self.cols}"
            )
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        # numpy scalars and bools are normalized to plain ints
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "SmallMatrix":
        """Build from a list of rows; `cols` is needed only for 0-row matrices"""
        rows = [tuple(r) for r in rows]
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("Ragged rows")
        if cols is not None and cols != width:
            raise DimensionMismatchError(f"Expected {cols} columns, got {width}")
        return cls(len(rows), width, tuple(e for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SmallMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int, sign: int = 1) -> "SmallMatrix":
        return cls(
            size,
            size,
            tuple(sign if i == j else 0 for i in range(size) for j in range(size)),
        )

    @classmethod
    def hstack(cls, blocks: Sequence["SmallMatrix"]) -> "SmallMatrix":
        """Concatenate side by side; all blocks need equal row counts"""
        if not blocks:
            return cls(0, 0, ())
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise DimensionMismatchError("hstack row counts differ")
        grid = [
            tuple(e for b in blocks for e in b.row(i)) for i in range(rows)
        ]
        return cls.from_rows(grid, cols=sum(b.cols for b in blocks))

    def row(self, i: int) -> IntVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> IntVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @cached_property
    def columns(self) -> Tuple[IntVector, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    @cached_property
    def max_abs_entry(self) -> int:
        return max((abs(e) for e in self.entries), default=0)

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only int64 view; raises when an entry leaves the int64 range"""
        if self.max_abs_entry >= Defaults.INT64_SAFE_BOUND:
            raise ArithmeticOverflowError(
                f"Entry magnitude {self.max_abs_entry} exceeds int64 headroom"
            )
        arr = np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)
        arr.setflags(write=False)
        return arr

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def negated(self) -> "SmallMatrix":
        return SmallMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {"rows": self.rows, "cols": self.cols, "entries": self.to_rows()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SmallMatrix":
        """Create from dictionary"""
        return cls.from_rows(data["entries"], cols=data.get("cols"))
