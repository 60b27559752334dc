"""
Test suite for the Graver engines.

Covers the conformal order, box enumeration, the enumeration and completion
engines (cross-checked against each other), and positive decomposition over
a Graver set.
"""

import itertools
import os
import sys
import unittest

project_root = os.path.join(os.path.dirname(__file__), "..")
sys.path.insert(0, project_root)

os.environ["ENVIRONMENT"] = "TEST"

from hypothesis import given, settings, strategies as st

from src.blockmat import apply, assemble
from src.common.enums import GraverMethod, MatrixKind
from src.common.exceptions import (
    BudgetExceededError,
    NotInKernelError,
    PreconditionViolationError,
)
from src.graver import (
    conforms,
    enumerate_box,
    graver_complete,
    graver_decompose,
    graver_enumerate,
    kernel_lattice_basis,
    kernel_points,
    minimal_elements,
    normal_form,
    orthant_filter,
    pairwise_sign_compatible,
    sign_compatible,
)
from src.instances import gen_lower_3block, witness_3block
from src.models.small_matrix import SmallMatrix


def _positive_row(row):
    """row with its first nonzero entry made positive"""
    lead = next((a for a in row if a), 1)
    return tuple(a if lead > 0 else -a for a in row)


def small_matrices():
    """Every 1x2, 1x3 and 2x3 matrix over [-2, 2], up to row order and row sign"""
    seen = set()
    for rows, cols in ((1, 2), (1, 3), (2, 3)):
        for entries in itertools.product(range(-2, 3), repeat=rows * cols):
            key = tuple(
                sorted(_positive_row(entries[r * cols : (r + 1) * cols]) for r in range(rows))
            )
            if key not in seen:
                seen.add(key)
                yield [list(row) for row in key]


class TestConformalOrder(unittest.TestCase):
    def test_conforms(self):
        self.assertTrue(conforms((1, 0, -2), (2, 1, -2)))
        self.assertFalse(conforms((1, 0, -2), (2, 1, 2)))
        self.assertFalse(conforms((3,), (2,)))
        self.assertTrue(conforms((0, 0), (0, 0)))

    def test_sign_compatibility(self):
        self.assertTrue(sign_compatible((1, 0), (5, -1)))
        self.assertFalse(sign_compatible((1, -1), (1, 1)))
        self.assertTrue(pairwise_sign_compatible([(1, 0), (2, -1), (0, -3)]))
        self.assertFalse(pairwise_sign_compatible([(1, 0), (-1, 0)]))

    def test_minimal_elements(self):
        vectors = [(1, 1), (2, 2), (0, 0), (1, -1), (2, 0)]
        self.assertEqual(minimal_elements(vectors), [(1, -1), (1, 1), (2, 0)])


class TestEnumerateBox(unittest.TestCase):
    def test_lexicographic_points(self):
        M = SmallMatrix.from_rows([[1, 1]])
        self.assertEqual(
            list(enumerate_box(M, (2,), (0, 0), (2, 2))), [(0, 2), (1, 1), (2, 0)]
        )

    def test_empty_box(self):
        M = SmallMatrix.from_rows([[1, 1]])
        self.assertEqual(list(enumerate_box(M, (9,), (0, 0), (2, 2))), [])
        self.assertEqual(list(enumerate_box(M, (0,), (1, 0), (0, 0))), [])

    def test_node_budget(self):
        M = SmallMatrix.from_rows([[1, -1]])
        with self.assertRaises(BudgetExceededError):
            list(enumerate_box(M, (0,), (-5, -5), (5, 5), node_budget=3))

    def test_wrong_lengths(self):
        M = SmallMatrix.from_rows([[1, -1]])
        with self.assertRaises(PreconditionViolationError):
            list(enumerate_box(M, (0, 0), (0, 0), (1, 1)))

    def test_threaded_slices_share_the_budget(self):
        M = SmallMatrix.from_rows([[1, -1]])
        # 11 slices of 2 nodes each, 22 nodes serially
        serial = kernel_points(M, 5, node_budget=22, threads=1)
        self.assertEqual(len(serial), 10)
        self.assertEqual(kernel_points(M, 5, node_budget=22, threads=2), serial)
        with self.assertRaises(BudgetExceededError):
            kernel_points(M, 5, node_budget=21, threads=2)


class TestGraverEngines(unittest.TestCase):
    def test_single_difference(self):
        M = SmallMatrix.from_rows([[1, -1]])
        basis = graver_complete(M)
        self.assertEqual(basis.elements, frozenset({(1, 1), (-1, -1)}))
        self.assertEqual(basis.max_norm, 1)
        self.assertTrue(basis.certified_complete)
        self.assertEqual(basis.method, GraverMethod.COMPLETION)

    def test_all_ones_row(self):
        M = SmallMatrix.from_rows([[1, 1, 1]])
        expected = {
            (1, -1, 0),
            (-1, 1, 0),
            (1, 0, -1),
            (-1, 0, 1),
            (0, 1, -1),
            (0, -1, 1),
        }
        self.assertEqual(graver_complete(M).elements, frozenset(expected))
        self.assertEqual(graver_enumerate(M, 2).elements, frozenset(expected))

    def test_primitive_partition_identity(self):
        # circuits (2,-1,0) and (0,3,-2) plus the mixed elements of [1 2 3]
        M = SmallMatrix.from_rows([[1, 2, 3]])
        basis = graver_complete(M)
        self.assertIn((2, -1, 0), basis)
        self.assertIn((3, 0, -1), basis)
        self.assertIn((0, 3, -2), basis)
        self.assertIn((1, 1, -1), basis)
        self.assertEqual(basis.max_norm, 3)

    def test_enumeration_certification(self):
        M = SmallMatrix.from_rows([[1, -1]])
        self.assertFalse(graver_enumerate(M, 1).certified_complete)
        self.assertTrue(graver_enumerate(M, 1, asserted_bound=1).certified_complete)
        with self.assertRaises(PreconditionViolationError):
            graver_enumerate(M, 0)

    def test_completion_budget_keeps_partial(self):
        M = SmallMatrix.from_rows([[1, 1, 1]])
        with self.assertRaises(BudgetExceededError) as ctx:
            graver_complete(M, element_budget=1)
        partial = ctx.exception.partial
        self.assertIsNotNone(partial)
        self.assertFalse(partial.certified_complete)

    def test_kernel_lattice_basis(self):
        M = SmallMatrix.from_rows([[1, 2, 3], [0, 1, 1]])
        basis = kernel_lattice_basis(M)
        self.assertEqual(len(basis), 1)
        self.assertEqual(apply(M, basis[0]), (0, 0))
        self.assertEqual(max(abs(a) for a in basis[0]), 1)

    def test_normal_form(self):
        self.assertEqual(normal_form((3, 3), [(1, 1)]), (0, 0))
        self.assertEqual(normal_form((3, 1), [(1, 1)]), (2, 0))

    def test_three_block_witness_is_graver_element(self):
        n = 3
        spec = gen_lower_3block(n)
        basis = graver_complete(assemble(spec, MatrixKind.H0))
        self.assertIn(witness_3block(n).flatten(), basis)
        self.assertGreaterEqual(basis.max_norm, n)

    @settings(max_examples=40, deadline=None)
    @given(
        rows=st.integers(min_value=1, max_value=2),
        data=st.data(),
    )
    def test_engines_agree(self, rows, data):
        cols = 3 if rows == 2 else data.draw(st.integers(min_value=2, max_value=3))
        entries = data.draw(
            st.lists(
                st.lists(st.integers(-2, 2), min_size=cols, max_size=cols),
                min_size=rows,
                max_size=rows,
            )
        )
        M = SmallMatrix.from_rows(entries)
        complete = graver_complete(M)
        if not complete.elements:
            return
        enumerated = graver_enumerate(M, complete.max_norm)
        self.assertEqual(enumerated.elements, complete.elements)

    @unittest.skipUnless(os.getenv("BLOCKIP_SLOW_TESTS"), "set BLOCKIP_SLOW_TESTS to run")
    def test_engines_agree_on_every_small_matrix(self):
        for rows in small_matrices():
            M = SmallMatrix.from_rows(rows)
            complete = graver_complete(M)
            if not complete.elements:
                continue
            with self.subTest(rows=rows):
                self.assertEqual(graver_enumerate(M, complete.max_norm).elements, complete.elements)


class TestGraverDecompose(unittest.TestCase):
    def setUp(self):
        self.basis = graver_complete(SmallMatrix.from_rows([[1, 1, 1]]))

    def test_positive_sum(self):
        y = (3, -1, -2)
        terms = graver_decompose(y, self.basis)
        total = [0, 0, 0]
        for alpha, g in terms:
            self.assertGreater(alpha, 0)
            self.assertTrue(conforms(g, y))
            total = [t + alpha * a for t, a in zip(total, g)]
        self.assertEqual(tuple(total), y)

    def test_not_in_kernel(self):
        with self.assertRaises(NotInKernelError):
            graver_decompose((1, 0, 0), self.basis)

    def test_orthant_filter(self):
        basis = graver_complete(SmallMatrix.from_rows([[1, -1]]))
        self.assertEqual(orthant_filter(basis), [(1, 1)])


if __name__ == "__main__":
    unittest.main()
