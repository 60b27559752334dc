"""
Test suite for Steinitz rearrangement, prefix collisions and the merging
partitioners.
"""

import os
import sys
import unittest
from fractions import Fraction

project_root = os.path.join(os.path.dirname(__file__), "..")
sys.path.insert(0, project_root)

os.environ["ENVIRONMENT"] = "TEST"

import numpy as np

from hypothesis import given, settings, strategies as st

from src.common.enums import MergeMode, SteinitzMethod
from src.common.exceptions import DimensionMismatchError, PreconditionViolationError
from src.merging import measured_constant, merge_1d, merge_kd, verify_partition
from src.models.sequence_models import SignPartition
from src.steinitz import prefix_collision, prefix_deviation, steinitz_permute


def vector_lists(max_kappa: int = 3, max_zeta: int = 3, max_len: int = 40):
    return st.integers(min_value=1, max_value=max_kappa).flatmap(
        lambda kappa: st.lists(
            st.lists(st.integers(-max_zeta, max_zeta), min_size=kappa, max_size=kappa),
            min_size=1,
            max_size=max_len,
        )
    )


class TestSteinitz(unittest.TestCase):
    def test_identity_kept_when_within_bound(self):
        result = steinitz_permute([(1,), (-1,), (1,), (-1,)])
        self.assertEqual(result.permutation, (0, 1, 2, 3))
        self.assertEqual(result.kappa, 1)
        self.assertEqual(result.zeta, 1)

    def test_reorders_sorted_input(self):
        vectors = [(1,)] * 6 + [(-1,)] * 6
        result = steinitz_permute(vectors)
        self.assertEqual(sorted(result.permutation), list(range(12)))
        self.assertLessEqual(result.achieved_bound, 1)
        self.assertEqual(prefix_deviation(vectors, result.permutation, 1), result.achieved_bound)

    def test_one_dimension_walks_the_line(self):
        # above the mean while the running sum is <= 0, else at or below it
        result = steinitz_permute([(-2,), (-2,), (1,), (3,)])
        self.assertEqual(result.permutation, (2, 0, 3, 1))
        self.assertEqual(result.achieved_bound, 2)
        self.assertEqual(result.method, SteinitzMethod.EXACT)

    def test_prefix_deviation_is_exact(self):
        # prefixes 2, 0 against (l - 1)/2 * 0
        self.assertEqual(prefix_deviation([(2,), (-2,)], (0, 1), 1), Fraction(2))

    def test_rejects_empty_and_ragged(self):
        with self.assertRaises(PreconditionViolationError):
            steinitz_permute([])
        with self.assertRaises(DimensionMismatchError):
            steinitz_permute([(1, 2), (1,)])

    @settings(max_examples=150, deadline=None)
    @given(vectors=vector_lists())
    def test_deviation_within_kappa_zeta(self, vectors):
        result = steinitz_permute(vectors)
        self.assertEqual(sorted(result.permutation), list(range(len(vectors))))
        self.assertLessEqual(result.achieved_bound, result.kappa * result.zeta)

    @settings(max_examples=60, deadline=None)
    @given(vectors=vector_lists(max_len=20))
    def test_greedy_meets_the_same_bound(self, vectors):
        result = steinitz_permute(vectors, SteinitzMethod.GREEDY)
        self.assertLessEqual(result.achieved_bound, result.certified_bound)


class TestPrefixCollision(unittest.TestCase):
    def test_collision_found(self):
        self.assertEqual(prefix_collision([1, -1, 2], 2), (0, 2))
        self.assertEqual(prefix_collision([(1, 0), (0, 1), (-1, -1)], 1), (0, 3))

    def test_no_collision(self):
        self.assertIsNone(prefix_collision([1, 1], 2))

    def test_escaping_prefix(self):
        with self.assertRaises(PreconditionViolationError):
            prefix_collision([3], 2)


class TestMerging(unittest.TestCase):
    def test_short_sequence_is_one_subset(self):
        partition = merge_1d([1, -1, 2])
        self.assertEqual(partition.subsets, (frozenset({0, 1, 2}),))
        self.assertEqual(partition.mode, MergeMode.ONE_DIM)

    def test_long_sequence_splits(self):
        values = [1, -1] * 10 + [1]
        partition = merge_1d(values)
        self.assertGreater(len(partition.subsets), 1)
        self.assertLessEqual(partition.max_size, 8)
        self.assertTrue(verify_partition(values, partition))

    def test_verify_rejects_bad_partitions(self):
        values = [(1,), (-1,), (1,)]
        overlapping = SignPartition((frozenset({0, 1}), frozenset({1, 2})), 1, 1, MergeMode.ONE_DIM)
        missing = SignPartition((frozenset({0}),), 1, 1, MergeMode.ONE_DIM)
        wrong_sign = SignPartition((frozenset({1}), frozenset({0, 2})), 1, 1, MergeMode.ONE_DIM)
        self.assertFalse(verify_partition(values, overlapping))
        self.assertFalse(verify_partition(values, missing))
        self.assertFalse(verify_partition(values, wrong_sign))

    def test_measured_constant(self):
        self.assertIsNone(measured_constant(0, 2, 1))
        self.assertIsNone(measured_constant(4, 0, 1))
        self.assertAlmostEqual(measured_constant(16, 2, 2), 1.0)

    @settings(max_examples=150, deadline=None)
    @given(
        values=st.lists(st.integers(-3, 3), min_size=1, max_size=80).filter(
            lambda vs: any(vs)
        )
    )
    def test_one_dimension_size_bound(self, values):
        partition = merge_1d(values)
        self.assertTrue(verify_partition(values, partition))
        self.assertLessEqual(partition.max_size, 6 * partition.zeta + 2)

    @settings(max_examples=60, deadline=None)
    @given(
        vectors=st.lists(
            st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=1, max_size=24
        )
    )
    def test_two_dimensions_conformal(self, vectors):
        partition = merge_kd(vectors)
        self.assertEqual(partition.mode, MergeMode.MULTI_DIM)
        self.assertEqual(partition.kappa, 2)
        self.assertTrue(verify_partition(vectors, partition))


slow = unittest.skipUnless(os.getenv("BLOCKIP_SLOW_TESTS"), "set BLOCKIP_SLOW_TESTS to run")


class TestMergingSweeps(unittest.TestCase):
    """Seeded sweeps over many sequences"""

    @slow
    def test_one_dimension_thousand_sequences(self):
        rng = np.random.default_rng(7)
        for k in range(1000):
            values = [int(v) for v in rng.integers(-3, 4, size=int(rng.integers(1, 81)))]
            if not any(values):
                continue
            partition = merge_1d(values)
            with self.subTest(k=k):
                self.assertTrue(verify_partition(values, partition))
                self.assertLessEqual(partition.max_size, 6 * partition.zeta + 2)
                self.assertLessEqual(partition.max_size, 20)

    @slow
    def test_two_dimensions_max_size_grows_with_zeta(self):
        rng = np.random.default_rng(8)
        largest = {}
        for zeta in (1, 2, 4, 8):
            for _ in range(50):
                vectors = [
                    (int(a), int(b)) for a, b in rng.integers(-zeta, zeta + 1, size=(40, 2))
                ]
                partition = merge_kd(vectors)
                self.assertTrue(verify_partition(vectors, partition))
                largest[partition.zeta] = max(largest.get(partition.zeta, 0), partition.max_size)
        sizes = [largest[z] for z in sorted(largest)]
        self.assertEqual(sizes, sorted(sizes))


if __name__ == "__main__":
    unittest.main()
