"""
Document models for the versioned text formats

Every document is a header line followed by a JSON body; the body is
validated against the models below before domain objects are built.
"""

from typing import Optional, Dict, Any, List, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from ..common.constants import BoundTokens


class MatrixDocument(BaseModel):
    """Integer matrix as a list of rows"""

    entries: List[List[int]] = Field(..., description="Row-major integer grid")
    cols: Optional[int] = Field(
        None, description="Column count, required when there are no rows"
    )

    @model_validator(mode="after")
    def check_rectangular(self) -> "MatrixDocument":
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError(f"ragged rows with widths {sorted(widths)}")
        if self.entries and self.cols is not None and self.cols != len(self.entries[0]):
            raise ValueError(
                f"cols={self.cols} but rows have {len(self.entries[0])} entries"
            )
        return self


class BlocksDocument(BaseModel):
    """The four blocks and the multiplicity n"""

    A: MatrixDocument
    B: MatrixDocument
    C: MatrixDocument
    D: MatrixDocument
    n: int = Field(..., ge=1)


BoundValue = Union[int, str]


class InstanceDocument(BaseModel):
    """min w.x s.t. Hx = b, lower <= x <= upper"""

    blocks: Optional[BlocksDocument] = None
    matrix: Optional[MatrixDocument] = None
    b: List[int]
    lower: List[BoundValue]
    upper: List[BoundValue]
    w: List[int]
    three_block: bool = False

    @field_validator("lower")
    @classmethod
    def check_lower_tokens(cls, values: List[BoundValue]) -> List[BoundValue]:
        for v in values:
            if isinstance(v, str) and v != BoundTokens.NEG_INF:
                raise ValueError(f"lower bound token must be '{BoundTokens.NEG_INF}'")
        return values

    @field_validator("upper")
    @classmethod
    def check_upper_tokens(cls, values: List[BoundValue]) -> List[BoundValue]:
        for v in values:
            if isinstance(v, str) and v != BoundTokens.POS_INF:
                raise ValueError(f"upper bound token must be '{BoundTokens.POS_INF}'")
        return values

    @model_validator(mode="after")
    def check_constraint(self) -> "InstanceDocument":
        if (self.blocks is None) == (self.matrix is None):
            raise ValueError("exactly one of 'blocks' or 'matrix' is required")
        return self


class VectorsDocument(BaseModel):
    """A sequence of integer vectors (Steinitz / merging input, kernel vectors)"""

    vectors: List[List[int]]

    @field_validator("vectors")
    @classmethod
    def check_common_dimension(cls, vectors: List[List[int]]) -> List[List[int]]:
        if len({len(v) for v in vectors}) > 1:
            raise ValueError("vectors have different dimensions")
        return vectors


class BasisDocument(BaseModel):
    """A serialized Graver set"""

    matrix: MatrixDocument
    elements: List[List[int]]
    method: str
    certified_complete: bool
    radius: Optional[int] = None
    max_norm: int = 0


class ResultDocument(BaseModel):
    """Command output with the invariant verdicts it was checked against"""

    command: str
    payload: Dict[str, Any]
    checks: Dict[str, bool] = Field(default_factory=dict)

    @property
    def all_checks_passed(self) -> bool:
        return all(self.checks.values())
