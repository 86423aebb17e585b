from unittest import mock

from django.test import SimpleTestCase, tag

from bidisk.exceptions import DomainError
from bidisk.verification import (
    QUICK_RANGES,
    SUITE_NAMES,
    Status,
    registered_properties,
    run_suite,
)


class TestRegistry(SimpleTestCase):
    def test_suites(self):
        self.assertEqual(SUITE_NAMES, ("linalg", "invariants", "asymptotics", "fh"))
        names = {}
        for suite in SUITE_NAMES:
            names[suite] = [prop.name for prop in registered_properties(suite)]
        self.assertIn("cofactor oracle", names["linalg"])
        self.assertIn("series equals closed form", names["invariants"])
        self.assertIn("monotonicity certificate", names["asymptotics"])
        self.assertIn("vanishing case", names["fh"])
        total = sum(len(v) for v in names.values())
        self.assertEqual(len(registered_properties("all")), total)

    def test_unknown_suite(self):
        self.assertRaises(DomainError, registered_properties, "topology")


class TestQuickSuites(SimpleTestCase):
    def assertSuitePasses(self, suite):
        results = run_suite(suite, QUICK_RANGES)
        self.assertTrue(results)
        for result in results:
            self.assertTrue(result.passed, f"{result.property}: {result.counterexample}")

    def test_linalg(self):
        self.assertSuitePasses("linalg")

    def test_invariants(self):
        self.assertSuitePasses("invariants")

    def test_asymptotics(self):
        self.assertSuitePasses("asymptotics")

    def test_fh(self):
        self.assertSuitePasses("fh")

    def test_k_max_override(self):
        results = run_suite("asymptotics", QUICK_RANGES, k_max=5)
        self.assertTrue(all(result.passed for result in results))


class TestFaultInjection(SimpleTestCase):
    def test_wrong_closed_form(self):
        with mock.patch("bidisk.invariants.sigma.P_poly", side_effect=lambda k: 0):
            results = {r.property: r for r in run_suite("invariants", QUICK_RANGES)}
        series = results["series equals closed form"]
        self.assertIs(series.status, Status.FAIL)
        self.assertEqual(series.counterexample, "zw2 k=3")
        self.assertEqual(series.as_dict()["status"], "fail")

    def test_exception_becomes_failure(self):
        with mock.patch(
            "bidisk.verification.linalg.f_sequence", side_effect=DomainError("boom")
        ):
            results = {r.property: r for r in run_suite("linalg", QUICK_RANGES)}
        self.assertFalse(results["F_n recurrence"].passed)
        self.assertEqual(results["F_n recurrence"].counterexample, "DomainError: boom")


@tag("slow")
class TestAcceptanceRanges(SimpleTestCase):
    def test_all_suites(self):
        for result in run_suite("all"):
            self.assertTrue(result.passed, f"{result.property}: {result.counterexample}")
