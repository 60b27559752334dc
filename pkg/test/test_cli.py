"""
Test suite for the command-line surface.

Runs the commands in-process through main() against temporary files and
checks exit codes and the embedded invariant verdicts.
"""

import io
import os
import sys
import tempfile
import unittest
from contextlib import redirect_stdout
from pathlib import Path

project_root = os.path.join(os.path.dirname(__file__), "..")
sys.path.insert(0, project_root)

os.environ["ENVIRONMENT"] = "TEST"

import pandas as pd

from src.cli import exit_code_for, main
from src.common.enums import ExitCode
from src.common.exceptions import (
    BudgetExceededError,
    CounterexampleFoundError,
    InstanceParseError,
    PreconditionViolationError,
)
from src.instances import gen_lower_3block, witness_3block
from src.models.ip_instance import IPInstance
from src.models.small_matrix import SmallMatrix
from src.parsers import (
    basis_parser,
    instance_parser,
    matrix_parser,
    result_parser,
    vectors_parser,
)


class CommandTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def run_cli(self, *argv: str) -> int:
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = main(list(argv))
        self.stdout = buffer.getvalue()
        return code

    def result(self, name: str):
        return result_parser.read(self.tmp / name)


class TestGraverCommand(CommandTestCase):
    def test_complete_with_basis_file(self):
        matrix_parser.write(SmallMatrix.from_rows([[1, -1]]), self.tmp / "m.txt")
        code = self.run_cli(
            "graver",
            str(self.tmp / "m.txt"),
            "--basis-out",
            str(self.tmp / "basis.txt"),
            "-o",
            str(self.tmp / "out.txt"),
        )
        self.assertEqual(code, 0)
        document = self.result("out.txt")
        self.assertEqual(document.payload["count"], 2)
        self.assertEqual(document.payload["max_norm"], 1)
        self.assertTrue(document.all_checks_passed)
        self.assertEqual(len(basis_parser.read(self.tmp / "basis.txt")), 2)

    def test_enum_writes_to_stdout(self):
        matrix_parser.write(SmallMatrix.from_rows([[1, 1, 1]]), self.tmp / "m.txt")
        code = self.run_cli("graver", str(self.tmp / "m.txt"), "--method", "enum", "--radius", "1")
        self.assertEqual(code, 0)
        document = result_parser.loads(self.stdout)
        self.assertEqual(document.payload["count"], 6)
        self.assertEqual(len(document.payload["elements"]), 6)

    def test_enum_needs_radius(self):
        matrix_parser.write(SmallMatrix.from_rows([[1, -1]]), self.tmp / "m.txt")
        self.assertEqual(self.run_cli("graver", str(self.tmp / "m.txt"), "--method", "enum"), 3)


class TestSolveCommands(CommandTestCase):
    def setUp(self):
        super().setUp()
        inst = IPInstance(SmallMatrix.from_rows([[1, 1]]), (2,), (0, 0), (2, 2), (1, 2))
        instance_parser.write(inst, self.tmp / "inst.txt")

    def test_solve(self):
        code = self.run_cli("solve", str(self.tmp / "inst.txt"), "-o", str(self.tmp / "out.txt"))
        self.assertEqual(code, 0)
        payload = self.result("out.txt").payload
        self.assertEqual(payload["status"], "optimal")
        self.assertEqual(payload["solution"], [2, 0])
        self.assertEqual(payload["objective"], 2)
        self.assertEqual(payload["stats"]["xi"], 2)

    def test_brute_matches(self):
        code = self.run_cli("brute", str(self.tmp / "inst.txt"), "-o", str(self.tmp / "out.txt"))
        self.assertEqual(code, 0)
        self.assertEqual(self.result("out.txt").payload["objective"], 2)

    def test_step_budget_exit_code(self):
        code = self.run_cli("solve", str(self.tmp / "inst.txt"), "--step-budget", "1")
        self.assertEqual(code, 2)
        self.assertEqual(result_parser.loads(self.stdout).payload["status"], "budget_exceeded")

    def test_infeasible_instance_exits_cleanly(self):
        inst = IPInstance(SmallMatrix.from_rows([[2]]), (1,), (-3,), (3,), (1,))
        instance_parser.write(inst, self.tmp / "odd.txt")
        self.assertEqual(self.run_cli("solve", str(self.tmp / "odd.txt"), "-o", str(self.tmp / "s.txt")), 0)
        document = self.result("s.txt")
        self.assertEqual(document.payload["status"], "infeasible")
        self.assertEqual(document.payload["stats"]["phase_one_objective"], 1)
        self.assertEqual(document.checks, {"no_point_status": True, "phase_one_positive": True})

        self.assertEqual(self.run_cli("brute", str(self.tmp / "odd.txt"), "-o", str(self.tmp / "b.txt")), 0)
        document = self.result("b.txt")
        self.assertEqual(document.payload["status"], "infeasible")
        self.assertEqual(document.checks, {"no_point_status": True})

    def test_parse_error_exit_code(self):
        (self.tmp / "bad.txt").write_text("# blockip-instance v1\n{not json", encoding="utf-8")
        self.assertEqual(self.run_cli("solve", str(self.tmp / "bad.txt")), 3)


class TestDecomposeCommand(CommandTestCase):
    def setUp(self):
        super().setUp()
        spec = gen_lower_3block(3)
        cols = spec.cols
        inst = IPInstance(spec, (0,) * spec.rows, (None,) * cols, (None,) * cols, (0,) * cols, True)
        instance_parser.write(inst, self.tmp / "inst.txt")
        vectors_parser.write(
            [witness_3block(3).flatten(), witness_3block(3).scale(2).flatten()],
            self.tmp / "vectors.txt",
        )

    def test_modes(self):
        for mode in ("bounded", "orthant", "witness"):
            with self.subTest(mode=mode):
                code = self.run_cli(
                    "decompose",
                    str(self.tmp / "inst.txt"),
                    str(self.tmp / "vectors.txt"),
                    "--mode",
                    mode,
                    "-o",
                    str(self.tmp / f"{mode}.txt"),
                )
                self.assertEqual(code, 0)
                document = self.result(f"{mode}.txt")
                self.assertEqual(len(document.payload["results"]), 2)
                self.assertTrue(document.all_checks_passed)
        witness = self.result("witness.txt").payload["results"]
        self.assertIsNone(witness[0]["witness"])
        self.assertIsNotNone(witness[1]["witness"])

    def test_wrong_length_vector(self):
        vectors_parser.write([(1, 2)], self.tmp / "short.txt")
        code = self.run_cli("decompose", str(self.tmp / "inst.txt"), str(self.tmp / "short.txt"))
        self.assertEqual(code, 3)


class TestSequenceCommands(CommandTestCase):
    def test_steinitz(self):
        vectors_parser.write([(1,)] * 5 + [(-1,)] * 5, self.tmp / "v.txt")
        code = self.run_cli("steinitz", str(self.tmp / "v.txt"), "-o", str(self.tmp / "out.txt"))
        self.assertEqual(code, 0)
        document = self.result("out.txt")
        self.assertEqual(sorted(document.payload["permutation"]), list(range(10)))
        self.assertTrue(document.checks["within_kappa_zeta"])

    def test_merge_modes(self):
        vectors_parser.write([(1,), (-1,)] * 8 + [(1,)], self.tmp / "v1.txt")
        self.assertEqual(
            self.run_cli("merge", str(self.tmp / "v1.txt"), "--mode", "1d", "-o", str(self.tmp / "a.txt")),
            0,
        )
        self.assertTrue(self.result("a.txt").checks["size_bound"])

        vectors_parser.write([(1, -1), (0, 2), (-1, 0), (2, 1)], self.tmp / "v2.txt")
        self.assertEqual(self.run_cli("merge", str(self.tmp / "v2.txt"), "-o", str(self.tmp / "b.txt")), 0)
        self.assertEqual(self.result("b.txt").payload["kappa"], 2)

    def test_1d_mode_rejects_vectors(self):
        vectors_parser.write([(1, 2)], self.tmp / "v.txt")
        self.assertEqual(self.run_cli("merge", str(self.tmp / "v.txt"), "--mode", "1d"), 3)


class TestInstanceCommands(CommandTestCase):
    def test_certify(self):
        code = self.run_cli(
            "certify", "--family", "four_block", "--t", "2", "--n", "3", "-o", str(self.tmp / "c.txt")
        )
        self.assertEqual(code, 0)
        payload = self.result("c.txt").payload
        self.assertEqual(payload["min_norm_verified"], 3)
        self.assertTrue(payload["attained"])

    def test_certify_divisibility_chain(self):
        code = self.run_cli(
            "certify", "--family", "four_block", "--t", "3", "--n", "3",
            "--method", "divisibility", "-o", str(self.tmp / "c.txt"),
        )
        self.assertEqual(code, 0)
        document = self.result("c.txt")
        self.assertEqual(document.payload["chain"], [[1, 9], [2, 6], [3, 4]])
        self.assertTrue(document.checks["chain_replays"])

    def test_certify_counterexample(self):
        code = self.run_cli("certify", "--family", "four_block", "--n", "3", "--bound", "4")
        self.assertEqual(code, 1)

    def test_scaling_csv(self):
        target = self.tmp / "scaling.csv"
        code = self.run_cli(
            "scaling", "--family", "three_block", "--n-list", "2", "3", "4", "-o", str(target)
        )
        self.assertEqual(code, 0)
        self.assertEqual(pd.read_csv(target)["norm"].tolist(), [2, 3, 4])

    def test_scaling_stdout(self):
        code = self.run_cli("scaling", "--family", "four_block", "--n-list", "2", "3")
        self.assertEqual(code, 0)
        self.assertTrue(self.stdout.startswith("family,t,n,norm"))

    def test_corpus(self):
        out_dir = self.tmp / "corpus"
        code = self.run_cli("corpus", "--seed", "3", "--count", "4", "--out-dir", str(out_dir))
        self.assertEqual(code, 0)
        files = sorted(out_dir.iterdir())
        self.assertEqual(len(files), 4)
        for path in files:
            instance_parser.read(path)


class TestExitCodes(unittest.TestCase):
    def test_mapping(self):
        self.assertEqual(exit_code_for(InstanceParseError("x", "line 1")), ExitCode.PARSE_ERROR)
        self.assertEqual(exit_code_for(BudgetExceededError("x", 1)), ExitCode.BUDGET)
        self.assertEqual(
            exit_code_for(CounterexampleFoundError("x", (1,))), ExitCode.INVARIANT_VIOLATION
        )
        self.assertEqual(exit_code_for(PreconditionViolationError("x")), ExitCode.PARSE_ERROR)


if __name__ == "__main__":
    unittest.main()
