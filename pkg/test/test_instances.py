"""
Test suite for the lower-bound families, their certificates, the random
corpus and the scaling tables built from them.
"""

import os
import sys
import tempfile
import unittest
from pathlib import Path

project_root = os.path.join(os.path.dirname(__file__), "..")
sys.path.insert(0, project_root)

os.environ["ENVIRONMENT"] = "TEST"

import pandas as pd

from src.blockmat import in_kernel
from src.common.enums import CertificateMethod, LowerBoundFamily, MatrixKind, SolveStatus
from src.common.exceptions import CounterexampleFoundError, PreconditionViolationError
from src.handler import SCALING_COLUMNS, ScalingHandler
from src.instances import (
    CorpusParams,
    attained,
    certify_min_norm,
    family_of,
    gen_lower_3block,
    gen_lower_4block,
    min_kernel_norm,
    random_corpus,
    replay_chain,
    witness_3block,
    witness_4block,
)
from src.solver import brute_solve


class TestFamilies(unittest.TestCase):
    def test_witnesses_are_kernel_vectors(self):
        for t in (2, 3):
            for n in (2, 3, 4):
                with self.subTest(t=t, n=n):
                    w = witness_4block(t, n)
                    self.assertTrue(in_kernel(gen_lower_4block(t, n), w))
                    self.assertEqual(w.norm_inf(), n ** (t - 1))
        for n in range(2, 7):
            self.assertTrue(in_kernel(gen_lower_3block(n), witness_3block(n), MatrixKind.H0))
            self.assertEqual(witness_3block(n).norm_inf(), n)

    def test_family_detection(self):
        self.assertEqual(family_of(gen_lower_4block(2, 3)), LowerBoundFamily.FOUR_BLOCK)
        self.assertEqual(family_of(gen_lower_3block(3)), LowerBoundFamily.THREE_BLOCK)
        self.assertIsNone(family_of(gen_lower_4block(2, 3).without_c()))

    def test_parameter_checks(self):
        with self.assertRaises(PreconditionViolationError):
            gen_lower_4block(1, 3)
        with self.assertRaises(PreconditionViolationError):
            gen_lower_3block(1)


class TestCertificates(unittest.TestCase):
    def test_exhaustive_two_block_rows(self):
        for n in (2, 3, 4):
            with self.subTest(n=n):
                certificate = certify_min_norm(gen_lower_4block(2, n), n)
                self.assertEqual(certificate.min_norm_verified, n)
                self.assertEqual(certificate.method, CertificateMethod.EXHAUSTIVE)
                self.assertTrue(attained(certificate))

    @unittest.skipUnless(os.getenv("BLOCKIP_SLOW_TESTS"), "set BLOCKIP_SLOW_TESTS to run")
    def test_exhaustive_two_block_rows_at_larger_n(self):
        for n in (5, 6):
            with self.subTest(n=n):
                certificate = certify_min_norm(gen_lower_4block(2, n), n)
                self.assertEqual(certificate.min_norm_verified, n)
                self.assertTrue(attained(certificate))

    def test_divisibility_chain(self):
        for n, expected in ((2, 4), (3, 9), (4, 16)):
            with self.subTest(n=n):
                certificate = certify_min_norm(
                    gen_lower_4block(3, n), expected, CertificateMethod.DIVISIBILITY
                )
                self.assertEqual(certificate.min_norm_verified, expected)
                self.assertEqual(len(certificate.chain), 3)
                self.assertEqual(certificate.chain[0], (1, expected))
                self.assertTrue(replay_chain(certificate.chain, n))
                self.assertTrue(attained(certificate))

    def test_replay_chain(self):
        self.assertTrue(replay_chain([(1, 9), (2, 6), (3, 4)], 3))
        self.assertFalse(replay_chain([(1, 9), (2, 5), (3, 4)], 3))
        self.assertFalse(replay_chain([(1, 9), (2, 6), (3, 4)], 2))
        self.assertFalse(replay_chain([(2, 9), (1, 6)], 3))
        self.assertFalse(replay_chain([(1, 0), (2, 0)], 3))

    def test_bound_above_the_minimum_fails(self):
        with self.assertRaises(CounterexampleFoundError) as ctx:
            certify_min_norm(gen_lower_4block(2, 3), 4)
        self.assertEqual(max(abs(a) for a in ctx.exception.vector), 3)
        with self.assertRaises(CounterexampleFoundError):
            certify_min_norm(gen_lower_4block(3, 2), 5, CertificateMethod.DIVISIBILITY)

    def test_divisibility_needs_the_four_block_family(self):
        with self.assertRaises(PreconditionViolationError):
            certify_min_norm(gen_lower_3block(3), 1, CertificateMethod.DIVISIBILITY)

    def test_min_kernel_norm(self):
        self.assertEqual(min_kernel_norm(gen_lower_4block(2, 3), 5), 3)
        self.assertEqual(min_kernel_norm(gen_lower_3block(3), 3), 1)
        self.assertIsNone(min_kernel_norm(gen_lower_4block(2, 4), 2))


class TestCorpus(unittest.TestCase):
    def test_same_seed_same_corpus(self):
        params = CorpusParams()
        self.assertEqual(random_corpus(5, params, 20), random_corpus(5, params, 20))
        self.assertNotEqual(random_corpus(5, params, 20), random_corpus(6, params, 20))

    def test_ranges(self):
        params = CorpusParams(n_max=3, t_max=2, bound_range=2)
        for inst in random_corpus(1, params, 30):
            spec = inst.block_spec
            self.assertLessEqual(spec.n, 3)
            self.assertLessEqual(max(spec.t_A, spec.t_B), 2)
            self.assertLessEqual(spec.delta, params.entry_range)
            self.assertTrue(all(-2 <= lo <= 0 <= hi <= 2 for lo, hi in zip(inst.lower, inst.upper)))
            if inst.three_block:
                self.assertTrue(spec.is_three_block)

    def test_planted_instances_are_feasible(self):
        params = CorpusParams(n_max=2, t_max=2, bound_range=2, planted_fraction=1.0)
        for inst in random_corpus(9, params, 8):
            self.assertEqual(brute_solve(inst, 2).status, SolveStatus.OPTIMAL)

    def test_invalid_params(self):
        with self.assertRaises(PreconditionViolationError):
            CorpusParams(n_max=0)
        with self.assertRaises(PreconditionViolationError):
            CorpusParams(planted_fraction=1.5)


class TestScalingHandler(unittest.TestCase):
    def setUp(self):
        self.handler = ScalingHandler()

    def test_four_block_table(self):
        table = self.handler.build_table(LowerBoundFamily.FOUR_BLOCK, [2, 3, 4])
        self.assertEqual(list(table.columns), SCALING_COLUMNS)
        self.assertEqual(table["norm"].tolist(), [2, 3, 4])
        self.assertTrue(table["verified"].all())
        self.assertEqual(set(table["method"]), {CertificateMethod.EXHAUSTIVE.value})

    def test_four_block_t3_uses_divisibility(self):
        table = self.handler.build_table(LowerBoundFamily.FOUR_BLOCK, [2, 3, 4], t=3)
        self.assertEqual(table["norm"].tolist(), [4, 9, 16])
        self.assertEqual(set(table["method"]), {CertificateMethod.DIVISIBILITY.value})

    def test_three_block_table(self):
        table = self.handler.build_table(LowerBoundFamily.THREE_BLOCK, [2, 3, 4, 5])
        self.assertEqual(table["norm"].tolist(), [2, 3, 4, 5])
        self.assertTrue(table["verified"].all())

    def test_empty_n_values(self):
        with self.assertRaises(PreconditionViolationError):
            self.handler.build_table(LowerBoundFamily.THREE_BLOCK, [])

    def test_save_csv_and_excel(self):
        table = self.handler.build_table(LowerBoundFamily.THREE_BLOCK, [2, 3])
        with tempfile.TemporaryDirectory() as tmp:
            csv_path = self.handler.save(table, Path(tmp) / "scaling.csv")
            self.assertEqual(pd.read_csv(csv_path)["norm"].tolist(), [2, 3])
            xlsx_path = self.handler.save(table, Path(tmp) / "nested" / "scaling.xlsx")
            loaded = pd.read_excel(xlsx_path, sheet_name="scaling", engine="openpyxl")
            self.assertEqual(loaded["n"].tolist(), [2, 3])


if __name__ == "__main__":
    unittest.main()
