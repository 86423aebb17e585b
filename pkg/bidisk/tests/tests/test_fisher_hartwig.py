from django.test import SimpleTestCase

from bidisk.exceptions import DomainError, OutOfScopeParamsError, ZeroDeterminantError
from bidisk.linalg import (
    FHParams,
    fh_determinant,
    fh_determinant_exact,
    fh_exponent_estimate,
    fh_symbol_coeffs,
    fh_toeplitz_rows,
)


class TestFHParams(SimpleTestCase):
    def test_validation(self):
        self.assertRaises(OutOfScopeParamsError, FHParams, 0.5, 0)
        self.assertRaises(OutOfScopeParamsError, FHParams, 1, "1")
        self.assertRaises(DomainError, FHParams, -1, 0)

    def test_properties(self):
        self.assertEqual(FHParams(2, 1).sigma, 3)
        self.assertEqual(FHParams(1, 2).sigma, -3)
        self.assertTrue(FHParams(1, 2).vanishes)
        self.assertTrue(FHParams(0, -1).vanishes)
        self.assertFalse(FHParams(2, -2).vanishes)


class TestSymbolCoeffs(SimpleTestCase):
    def test_even_symbol(self):
        coeffs = fh_symbol_coeffs(FHParams(2, 0))
        self.assertEqual([coeffs[m] for m in range(-3, 4)], [0, 1, -4, 6, -4, 1, 0])

    def test_twisted_symbol(self):
        coeffs = fh_symbol_coeffs(FHParams(2, 1))
        self.assertEqual(coeffs.support, (-1, 3))
        self.assertEqual([coeffs[m] for m in range(-1, 4)], [-1, 4, -6, 4, -1])

    def test_toeplitz_rows(self):
        rows = fh_toeplitz_rows(FHParams(2, 1), 3)
        self.assertEqual(rows, [[4, -6, 4], [-1, 4, -6], [0, -1, 4]])


class TestDeterminants(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(fh_determinant(FHParams(2, 0), 3), 50)
        self.assertEqual(fh_determinant(FHParams(2, 1), 3), 20)
        self.assertEqual(fh_determinant(FHParams(2, -1), 3), 20)
        self.assertEqual(fh_determinant(FHParams(2, 0), 1), 6)
        self.assertEqual(fh_determinant(FHParams(1, 0), 9), 10)
        self.assertEqual(fh_determinant(FHParams(1, 1), 9), 1)
        self.assertEqual(fh_determinant(FHParams(0, 0), 5), 1)

    def test_closed_form_matches_elimination(self):
        for alpha in range(4):
            for beta in range(-3, 4):
                params = FHParams(alpha, beta)
                for n in range(1, 9):
                    with self.subTest(alpha=alpha, beta=beta, n=n):
                        self.assertEqual(
                            fh_determinant(params, n), fh_determinant_exact(params, n)
                        )

    def test_vanishing(self):
        for params in (FHParams(1, 2), FHParams(1, -2), FHParams(0, 1), FHParams(2, 3)):
            for n in range(1, 6):
                self.assertEqual(fh_determinant(params, n), 0)
                self.assertEqual(fh_determinant_exact(params, n), 0)

    def test_domain(self):
        self.assertRaises(DomainError, fh_determinant, FHParams(1, 0), 0)


class TestExponentEstimate(SimpleTestCase):
    def test_estimates(self):
        for params in (FHParams(1, 0), FHParams(2, 0), FHParams(2, 1), FHParams(3, -1)):
            estimate = fh_exponent_estimate(params, 50, 100)
            self.assertAlmostEqual(estimate, params.sigma, delta=0.1)

    def test_constant_determinants(self):
        self.assertAlmostEqual(fh_exponent_estimate(FHParams(1, 1), 10, 20), 0.0, places=6)

    def test_errors(self):
        self.assertRaises(ZeroDeterminantError, fh_exponent_estimate, FHParams(1, 2), 50, 100)
        self.assertRaises(DomainError, fh_exponent_estimate, FHParams(2, 0), 1, 10)
        self.assertRaises(DomainError, fh_exponent_estimate, FHParams(2, 0), 5, 5)
