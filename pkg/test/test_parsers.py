"""
Test suite for the versioned document formats.

Each document is a header line and a JSON body validated by pydantic;
parse errors must carry a line/column or a field path.
"""

import os
import sys
import tempfile
import unittest
from pathlib import Path

project_root = os.path.join(os.path.dirname(__file__), "..")
sys.path.insert(0, project_root)

os.environ["ENVIRONMENT"] = "TEST"

from src.common.constants import FileHeaders
from src.common.exceptions import InstanceParseError
from src.graver import graver_complete
from src.instances import CorpusParams, random_corpus
from src.models.file_models import ResultDocument
from src.models.ip_instance import IPInstance
from src.models.small_matrix import SmallMatrix
from src.parsers import (
    basis_parser,
    instance_parser,
    matrix_parser,
    result_parser,
    vectors_parser,
)


class TestInstanceDocuments(unittest.TestCase):
    def test_corpus_round_trip(self):
        for inst in random_corpus(4, CorpusParams(), 25):
            self.assertEqual(instance_parser.loads(instance_parser.dumps(inst)), inst)

    def test_infinite_bounds(self):
        inst = IPInstance(SmallMatrix.from_rows([[1, -1]]), (0,), (0, None), (None, 3), (1, 1))
        text = instance_parser.dumps(inst)
        self.assertTrue(text.startswith(FileHeaders.INSTANCE + "\n"))
        self.assertIn('"-inf"', text)
        self.assertIn('"+inf"', text)
        self.assertEqual(instance_parser.loads(text), inst)

    def test_output_is_deterministic(self):
        inst = random_corpus(8, CorpusParams(), 1)[0]
        self.assertEqual(instance_parser.dumps(inst), instance_parser.dumps(inst))

    def test_file_round_trip(self):
        inst = random_corpus(2, CorpusParams(), 1)[0]
        with tempfile.TemporaryDirectory() as tmp:
            path = instance_parser.write(inst, Path(tmp) / "sub" / "inst.txt")
            self.assertEqual(instance_parser.read(path), inst)


class TestParseErrors(unittest.TestCase):
    def test_wrong_header(self):
        with self.assertRaises(InstanceParseError) as ctx:
            instance_parser.loads(FileHeaders.MATRIX + '\n{"entries": [[1]]}')
        self.assertEqual(ctx.exception.position, "line 1")

    def test_malformed_json(self):
        text = FileHeaders.MATRIX + '\n{\n  "entries": [[1, 2],\n}'
        with self.assertRaises(InstanceParseError) as ctx:
            matrix_parser.loads(text)
        self.assertTrue(ctx.exception.position.startswith("line "))
        self.assertIn("column", ctx.exception.position)

    def test_missing_field(self):
        text = FileHeaders.INSTANCE + '\n{"matrix": {"entries": [[1]]}, "lower": [0], "upper": [1], "w": [1]}'
        with self.assertRaises(InstanceParseError) as ctx:
            instance_parser.loads(text)
        self.assertEqual(ctx.exception.position, "b")

    def test_bad_bound_token(self):
        text = (
            FileHeaders.INSTANCE
            + '\n{"matrix": {"entries": [[1]]}, "b": [0], "lower": ["+inf"], "upper": [1], "w": [1]}'
        )
        with self.assertRaises(InstanceParseError) as ctx:
            instance_parser.loads(text)
        self.assertEqual(ctx.exception.position, "lower")

    def test_ragged_matrix(self):
        with self.assertRaises(InstanceParseError):
            matrix_parser.loads(FileHeaders.MATRIX + '\n{"entries": [[1, 2], [3]]}')

    def test_inconsistent_instance(self):
        text = FileHeaders.INSTANCE + '\n{"matrix": {"entries": [[1]]}, "b": [0, 1], "lower": [0], "upper": [1], "w": [1]}'
        with self.assertRaises(InstanceParseError) as ctx:
            instance_parser.loads(text)
        self.assertEqual(ctx.exception.position, "body")

    def test_missing_file(self):
        with self.assertRaises(InstanceParseError):
            instance_parser.read("/nonexistent/instance.txt")


class TestOtherDocuments(unittest.TestCase):
    def test_matrix_without_rows(self):
        M = SmallMatrix.zeros(0, 3)
        self.assertEqual(matrix_parser.loads(matrix_parser.dumps(M)), M)

    def test_vectors(self):
        vectors = [(1, -2), (0, 3)]
        self.assertEqual(vectors_parser.loads(vectors_parser.dumps(vectors)), vectors)
        with self.assertRaises(InstanceParseError):
            vectors_parser.loads(FileHeaders.VECTORS + '\n{"vectors": [[1], [1, 2]]}')

    def test_basis(self):
        basis = graver_complete(SmallMatrix.from_rows([[1, 1, 1]]))
        loaded = basis_parser.loads(basis_parser.dumps(basis))
        self.assertEqual(loaded.elements, basis.elements)
        self.assertEqual(loaded.method, basis.method)
        self.assertTrue(loaded.certified_complete)

    def test_result(self):
        document = ResultDocument(command="solve", payload={"status": "optimal"}, checks={"a": True})
        loaded = result_parser.loads(result_parser.dumps(document))
        self.assertEqual(loaded, document)
        self.assertTrue(loaded.all_checks_passed)
        self.assertFalse(ResultDocument(command="x", payload={}, checks={"a": False}).all_checks_passed)


if __name__ == "__main__":
    unittest.main()
