"""
Parsers Package
Versioned text documents: header line plus validated JSON body
"""

from .base_document import BaseDocumentParser
from .documents import (
    MatrixParser,
    InstanceParser,
    VectorsParser,
    BasisParser,
    ResultParser,
    matrix_parser,
    instance_parser,
    vectors_parser,
    basis_parser,
    result_parser,
)

__all__ = [
    "BaseDocumentParser",
    "MatrixParser",
    "InstanceParser",
    "VectorsParser",
    "BasisParser",
    "ResultParser",
    "matrix_parser",
    "instance_parser",
    "vectors_parser",
    "basis_parser",
    "result_parser",
]
