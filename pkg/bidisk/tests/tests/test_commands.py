import json
import logging
import os
import tempfile
from unittest import mock

from django.core.management.base import CommandError
from django.test import SimpleTestCase, tag

from bidisk.exceptions import IdentityViolationError, SingularGramError
from bidisk.management.commands._base import (
    PARSE_ERROR,
    SINGULAR_GRAM,
    VERIFICATION_FAILED,
    BidiskCommand,
)

from .command_runner import run_command


class TestDeterminantsCommand(SimpleTestCase):
    def test_csv(self):
        stdout, _ = run_command("determinants", "--submodule", "zw2", "--n-max", "3")
        self.assertEqual(stdout, "n,numerator,denominator\n0,1,1\n1,6,1\n2,20,1\n3,50,1\n")

    def test_symbol(self):
        stdout, _ = run_command("determinants", "--symbol=-1,1", "--n-max", "2")
        self.assertEqual(stdout.splitlines()[1:], ["0,1,1", "1,2,1", "2,3,1"])

    def test_json(self):
        stdout, _ = run_command(
            "determinants", "--submodule", "zw", "--n-max", "1", "--format", "json"
        )
        self.assertEqual(
            json.loads(stdout),
            [
                {"n": 0, "numerator": 1, "denominator": 1},
                {"n": 1, "numerator": 2, "denominator": 1},
            ],
        )

    def test_deterministic(self):
        args = ("determinants", "--symbol", "1/2,3,-1", "--n-max", "12")
        self.assertEqual(run_command(*args)[0], run_command(*args)[0])

    def test_out(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "dets.csv")
            stdout, _ = run_command("determinants", "--submodule", "zw2", "--out", path)
            self.assertEqual(stdout, "")
            with open(path, encoding="utf-8") as f:
                lines = f.read().splitlines()
        self.assertEqual(len(lines), 12)
        self.assertEqual(lines[-1], "10,1716,1")


class TestCofactorsCommand(SimpleTestCase):
    def test_last_row(self):
        stdout, _ = run_command("cofactors", "--submodule", "zw2", "--n", "2")
        self.assertEqual(stdout, "n,row,j,value\n2,2,0,10\n2,2,1,20\n2,2,2,20\n")

    def test_first_row(self):
        stdout, _ = run_command("cofactors", "--submodule", "zw", "--n", "3", "--row", "first")
        self.assertEqual(stdout.splitlines()[1:], ["3,0,0,4", "3,0,1,3", "3,0,2,2", "3,0,3,1"])


class TestEigenvaluesCommand(SimpleTestCase):
    def test_zw2(self):
        stdout, _ = run_command("eigenvalues", "--submodule", "zw2", "--n-max", "2")
        lines = stdout.splitlines()
        self.assertEqual(lines[0], "n,lambda_sq,lambda_float")
        self.assertTrue(lines[1].startswith("1,4/9,0.666666666666666"))
        self.assertEqual(lines[2], "2,1/4,0.5")


class TestInvariantsCommand(SimpleTestCase):
    def test_csv(self):
        stdout, _ = run_command(
            "invariants", "--submodule", "zw", "--k-max", "1", "--truncation", "0"
        )
        lines = stdout.splitlines()
        self.assertEqual(
            lines[0],
            "k,pi2_coeff,const_coeff,partial_sum,tail_bound,float_value,asymptote,residual_k3",
        )
        self.assertTrue(lines[1].startswith("0,1/6,0,1,1,1.644934066848"))
        self.assertTrue(lines[1].endswith(",,"))
        self.assertTrue(lines[2].startswith("1,1/6,-1,1/4,1,0.644934066848"))

    def test_json_for_symbol(self):
        stdout, _ = run_command(
            "invariants", "--symbol", "1,-2,1", "--k-max", "2", "--truncation", "5",
            "--format", "json",
        )
        rows = json.loads(stdout)
        self.assertEqual([row["k"] for row in rows], [0, 1, 2])
        self.assertIsNone(rows[0]["pi2_coeff"])
        self.assertIsNone(rows[1]["tail_bound"])
        self.assertEqual(rows[0]["partial_sum"], "90281/44100")

    def test_trivial_symbol(self):
        stdout, _ = run_command(
            "invariants", "--symbol", "0,1", "--k-max", "2", "--truncation", "50"
        )
        expected = ["0,,,1,0,1.0,,", "1,,,0,0,0.0,,", "2,,,0,0,0.0,,"]
        self.assertEqual(stdout.splitlines()[1:], expected)


class TestExitCodes(SimpleTestCase):
    def assertReturnCode(self, returncode, *args):
        with self.assertRaises(CommandError) as cm:
            run_command(*args)
        self.assertEqual(cm.exception.returncode, returncode)

    def test_parse_errors(self):
        self.assertReturnCode(PARSE_ERROR, "determinants", "--symbol", "a,b")
        self.assertReturnCode(PARSE_ERROR, "determinants", "--symbol", "0,0")
        self.assertReturnCode(PARSE_ERROR, "determinants")
        self.assertReturnCode(PARSE_ERROR, "eigenvalues", "--submodule", "zw", "--n-max", "0")

    def test_argparse_errors(self):
        self.assertRaises(CommandError, run_command, "determinants", "--submodule", "zw3")
        self.assertRaises(CommandError, run_command, "determinants", "--n-max", "-1")

    def test_singular_gram(self):
        with mock.patch(
            "bidisk.management.commands.determinants.det_sequence",
            side_effect=SingularGramError("D_3 vanishes."),
        ):
            self.assertReturnCode(SINGULAR_GRAM, "determinants", "--submodule", "zw")

    def test_internal_identity_failure(self):
        with mock.patch(
            "bidisk.management.commands.determinants.det_sequence",
            side_effect=IdentityViolationError("Reversed row fails the expansion."),
        ):
            self.assertReturnCode(VERIFICATION_FAILED, "determinants", "--submodule", "zw")

    def test_verification_failure(self):
        with mock.patch("bidisk.invariants.sigma.P_poly", return_value=0):
            self.assertReturnCode(
                VERIFICATION_FAILED, "verify", "--suite", "invariants", "--quick"
            )


class TestVerifyCommand(SimpleTestCase):
    def test_quick_suite(self):
        stdout, stderr = run_command("verify", "--suite", "linalg", "--quick")
        payload = json.loads(stdout)
        self.assertEqual(payload["suite"], "linalg")
        self.assertTrue(payload["passed"])
        self.assertTrue(all(r["status"] == "pass" for r in payload["results"]))
        self.assertIn("[pass] linalg: cofactor oracle", stderr)

    def test_out(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "verify.json")
            run_command("verify", "--suite", "fh", "--quick", "--out", path)
            with open(path, encoding="utf-8") as f:
                payload = json.load(f)
        self.assertTrue(payload["passed"])
        self.assertEqual(
            [r["property"] for r in payload["results"]],
            ["fisher-hartwig determinants", "vanishing case", "growth exponent"],
        )

    @tag("slow")
    def test_all_suites_quick(self):
        stdout, _ = run_command("verify", "--quick", "--k-max", "40")
        self.assertTrue(json.loads(stdout)["passed"])


class TestLogging(SimpleTestCase):
    def test_verbosity_levels(self):
        command = BidiskCommand()
        logger = logging.getLogger("bidisk")
        level = logger.level
        try:
            levels = ((0, logging.WARNING), (2, logging.INFO), (3, logging.DEBUG))
            for verbosity, expected in levels:
                command.setup_logging(verbosity=verbosity)
                self.assertEqual(logger.level, expected)
        finally:
            logger.setLevel(level)
