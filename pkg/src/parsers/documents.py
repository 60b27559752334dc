"""
Concrete document parsers: matrices, instances, vector lists, Graver bases
and command results
"""

from typing import Any, Dict, List, Optional

from ..common.constants import BoundTokens, FileHeaders
from ..common.enums import GraverMethod
from ..models.small_matrix import SmallMatrix, IntVector
from ..models.four_block_spec import FourBlockSpec
from ..models.ip_instance import IPInstance
from ..models.graver_set import GraverSet
from ..models.file_models import (
    BasisDocument,
    InstanceDocument,
    MatrixDocument,
    ResultDocument,
    VectorsDocument,
)
from .base_document import BaseDocumentParser


def _matrix(doc: MatrixDocument) -> SmallMatrix:
    return SmallMatrix.from_rows(doc.entries, cols=doc.cols)


def _matrix_body(M: SmallMatrix) -> Dict[str, Any]:
    return {"entries": M.to_rows(), "cols": M.cols}


def _bound(value, token: str) -> Optional[int]:
    return None if value == token else int(value)


class MatrixParser(BaseDocumentParser[MatrixDocument, SmallMatrix]):
    header = FileHeaders.MATRIX
    model = MatrixDocument

    def to_domain(self, document: MatrixDocument) -> SmallMatrix:
        return _matrix(document)

    def to_body(self, value: SmallMatrix) -> Dict[str, Any]:
        return _matrix_body(value)


class InstanceParser(BaseDocumentParser[InstanceDocument, IPInstance]):
    header = FileHeaders.INSTANCE
    model = InstanceDocument

    def to_domain(self, document: InstanceDocument) -> IPInstance:
        if document.blocks is not None:
            blocks = document.blocks
            constraint = FourBlockSpec(
                A=_matrix(blocks.A),
                B=_matrix(blocks.B),
                C=_matrix(blocks.C),
                D=_matrix(blocks.D),
                n=blocks.n,
            )
        else:
            constraint = _matrix(document.matrix)
        return IPInstance(
            constraint=constraint,
            b=tuple(document.b),
            lower=tuple(_bound(v, BoundTokens.NEG_INF) for v in document.lower),
            upper=tuple(_bound(v, BoundTokens.POS_INF) for v in document.upper),
            w=tuple(document.w),
            three_block=document.three_block,
        )

    def to_body(self, value: IPInstance) -> Dict[str, Any]:
        if value.is_explicit:
            constraint = {"matrix": _matrix_body(value.constraint)}
        else:
            spec = value.constraint
            constraint = {
                "blocks": {
                    "A": _matrix_body(spec.A),
                    "B": _matrix_body(spec.B),
                    "C": _matrix_body(spec.C),
                    "D": _matrix_body(spec.D),
                    "n": spec.n,
                }
            }
        return {
            **constraint,
            "b": list(value.b),
            "lower": [BoundTokens.NEG_INF if v is None else v for v in value.lower],
            "upper": [BoundTokens.POS_INF if v is None else v for v in value.upper],
            "w": list(value.w),
            "three_block": value.three_block,
        }


class VectorsParser(BaseDocumentParser[VectorsDocument, List[IntVector]]):
    header = FileHeaders.VECTORS
    model = VectorsDocument

    def to_domain(self, document: VectorsDocument) -> List[IntVector]:
        return [tuple(v) for v in document.vectors]

    def to_body(self, value: List[IntVector]) -> Dict[str, Any]:
        return {"vectors": [list(v) for v in value]}


class BasisParser(BaseDocumentParser[BasisDocument, GraverSet]):
    header = FileHeaders.BASIS
    model = BasisDocument

    def to_domain(self, document: BasisDocument) -> GraverSet:
        matrix = _matrix(document.matrix)
        if any(len(g) != matrix.cols for g in document.elements):
            raise ValueError("basis element length differs from the matrix width")
        return GraverSet(
            matrix=matrix,
            elements=frozenset(tuple(g) for g in document.elements),
            method=GraverMethod(document.method),
            certified_complete=document.certified_complete,
            radius=document.radius,
        )

    def to_body(self, value: GraverSet) -> Dict[str, Any]:
        return {
            "matrix": _matrix_body(value.matrix),
            "elements": [list(g) for g in value.sorted_elements()],
            "method": value.method.value,
            "certified_complete": value.certified_complete,
            "radius": value.radius,
            "max_norm": value.max_norm,
        }


class ResultParser(BaseDocumentParser[ResultDocument, ResultDocument]):
    header = FileHeaders.RESULT
    model = ResultDocument

    def to_domain(self, document: ResultDocument) -> ResultDocument:
        return document

    def to_body(self, value: ResultDocument) -> Dict[str, Any]:
        return value.model_dump()


matrix_parser = MatrixParser()
instance_parser = InstanceParser()
vectors_parser = VectorsParser()
basis_parser = BasisParser()
result_parser = ResultParser()
