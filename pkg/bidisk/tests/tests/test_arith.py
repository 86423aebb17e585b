import random
from fractions import Fraction

import mpmath as mp
from django.test import SimpleTestCase, override_settings, tag

from bidisk import PI2_DIGITS, Pi2Digits
from bidisk.arith import (
    HarmonicCache,
    PiQuadratic,
    RationalInterval,
    Sign,
    barnes_g_int,
    bernoulli_even,
    harmonic,
    harmonic2,
    pi2_enclosure,
    pi2_enclosure_digits,
    qpi2_sign,
)
from bidisk.exceptions import BidiskError, DomainError, RefinementBudgetExceeded


class TestHarmonic(SimpleTestCase):
    def test_values(self):
        self.assertEqual(harmonic(0), 0)
        self.assertEqual(harmonic(2), Fraction(3, 2))
        self.assertEqual(harmonic(4), Fraction(25, 12))
        self.assertEqual(harmonic2(0), 0)
        self.assertEqual(harmonic2(2), Fraction(5, 4))
        self.assertEqual(harmonic2(3), Fraction(49, 36))

    def test_negative(self):
        self.assertRaises(DomainError, harmonic, -1)
        self.assertRaises(DomainError, harmonic2, -1)

    def test_differences(self):
        for n in range(1, 500):
            self.assertEqual(harmonic(n) - harmonic(n - 1), Fraction(1, n))
            self.assertEqual(harmonic2(n) - harmonic2(n - 1), Fraction(1, n * n))

    def test_cache_grows(self):
        cache = HarmonicCache()
        self.assertEqual(cache.max_n, 0)
        self.assertEqual(cache.harmonic(5), Fraction(137, 60))
        self.assertEqual(cache.max_n, 5)
        cache.extend_to(3)
        self.assertEqual(cache.max_n, 5)
        self.assertEqual(cache.H2[1], 1)

    @tag("slow")
    def test_differences_to_ten_thousand(self):
        for n in range(1, 10**4 + 1):
            self.assertEqual(harmonic2(n) - harmonic2(n - 1), Fraction(1, n * n))


class TestBernoulliAndBarnes(SimpleTestCase):
    def test_bernoulli(self):
        self.assertEqual(bernoulli_even(1), Fraction(1, 6))
        self.assertEqual(bernoulli_even(2), Fraction(-1, 30))
        self.assertEqual(bernoulli_even(3), Fraction(1, 42))
        self.assertEqual(bernoulli_even(4), Fraction(-1, 30))
        self.assertEqual(bernoulli_even(6), Fraction(691, -2730))
        self.assertRaises(DomainError, bernoulli_even, 0)

    def test_barnes(self):
        self.assertEqual(barnes_g_int(1), 1)
        self.assertEqual(barnes_g_int(2), 1)
        self.assertEqual(barnes_g_int(5), 12)
        self.assertEqual(barnes_g_int(8), 24883200)
        self.assertRaises(DomainError, barnes_g_int, 0)

    def test_barnes_functional_equation(self):
        factorial = 1
        for n in range(2, 201):
            # factorial = (n-1)!
            factorial *= n - 1
            self.assertEqual(barnes_g_int(n + 1), factorial * barnes_g_int(n))


class TestRationalInterval(SimpleTestCase):
    def test_empty(self):
        self.assertRaises(DomainError, RationalInterval, 2, 1)

    def test_ops(self):
        interval = RationalInterval(Fraction(-1, 2), 3)
        self.assertIn(0, interval)
        self.assertEqual(interval.width, Fraction(7, 2))
        self.assertEqual(interval.affine(-2, 1), RationalInterval(-5, 2))
        self.assertEqual(interval.square(), RationalInterval(0, 9))
        self.assertEqual(RationalInterval(-3, -2).square(), RationalInterval(4, 9))
        self.assertFalse(interval.excludes_zero())
        self.assertTrue(RationalInterval(1, 2).issubset(interval))


class TestPi2Enclosure(SimpleTestCase):
    def setUp(self):
        with mp.workdps(60):
            self.reference = mp.pi**2

    def assertContainsReference(self, interval):
        with mp.workdps(60):
            lo = mp.mpf(interval.lo.numerator) / interval.lo.denominator
            hi = mp.mpf(interval.hi.numerator) / interval.hi.denominator
            self.assertTrue(lo <= self.reference <= hi)

    def test_widths(self):
        for abs_err in (Fraction(1), Fraction(1, 10**6), Fraction(1, 10**30)):
            interval = pi2_enclosure(abs_err)
            self.assertLessEqual(interval.width, abs_err)
            self.assertContainsReference(interval)
        interval = pi2_enclosure(Fraction(1, 10**6))
        self.assertIn(Fraction(98696044, 10**7), interval)

    def test_nested(self):
        previous = pi2_enclosure_digits(1)
        for digits in range(2, 45):
            current = pi2_enclosure_digits(digits)
            self.assertTrue(current.issubset(previous), digits)
            previous = current

    def test_invalid(self):
        self.assertRaises(DomainError, pi2_enclosure, Fraction(0))


class TestPiQuadratic(SimpleTestCase):
    def test_ring(self):
        a = PiQuadratic(Fraction(2, 3), -4)
        b = PiQuadratic(Fraction(2, 3), -5)
        self.assertEqual(a - b, PiQuadratic.rational(1))
        self.assertEqual(a + b, PiQuadratic(Fraction(4, 3), -9))
        self.assertEqual(3 * a, PiQuadratic(2, -12))
        self.assertEqual(a - 1, b)
        self.assertEqual(1 - a, PiQuadratic(Fraction(-2, 3), 5))
        self.assertNotEqual(a, PiQuadratic(Fraction(2, 3), -4 + Fraction(1, 10**50)))
        self.assertTrue(PiQuadratic.rational(3).is_rational)

    def test_float(self):
        self.assertAlmostEqual(float(PiQuadratic.zeta2()), 1.6449340668482264, places=15)
        self.assertAlmostEqual(float(PiQuadratic(Fraction(2, 3), -4)), 2.579736267392906)

    def test_sign(self):
        self.assertIs(qpi2_sign(PiQuadratic(0, -4)), Sign.NEGATIVE)
        self.assertIs(qpi2_sign(PiQuadratic(0, 0)), Sign.ZERO)
        self.assertIs(qpi2_sign(PiQuadratic(Fraction(2, 3), -4)), Sign.POSITIVE)
        self.assertIs(qpi2_sign(PiQuadratic(Fraction(178, 3), -585)), Sign.POSITIVE)
        self.assertLess(PiQuadratic(Fraction(2, 3), -5), PiQuadratic(Fraction(2, 3), -4))

    def test_sign_needs_refinement(self):
        # (355/113)^2 exceeds pi^2 by about 2.5e-6
        close = PiQuadratic(1, -Fraction(355, 113) ** 2)
        self.assertIs(qpi2_sign(close, digits=2), Sign.NEGATIVE)

    @override_settings(BIDISK_SIGN_MAX_DIGITS=5)
    def test_refinement_budget(self):
        value = PiQuadratic(1, -pi2_enclosure_digits(30).midpoint)
        self.assertRaises(RefinementBudgetExceeded, qpi2_sign, value, 3)

    def assertSignsAgreeWithFloat(self, draws, seed):
        rng = random.Random(seed)
        checked = 0
        for _ in range(draws):
            value = PiQuadratic(
                Fraction(rng.randint(-1000, 1000), rng.randint(1, 50)),
                Fraction(rng.randint(-10**5, 10**5), rng.randint(1, 50)),
            )
            approx = float(value.pi2_coeff) * 9.869604401089358 + float(value.const_coeff)
            if abs(approx) > 1e-6:
                checked += 1
                self.assertEqual(int(qpi2_sign(value)), (approx > 0) - (approx < 0))
        self.assertGreater(checked, draws // 2)

    def test_sign_agrees_with_float(self):
        self.assertSignsAgreeWithFloat(2000, seed=20240601)

    @tag("slow")
    def test_sign_agrees_with_float_many_draws(self):
        self.assertSignsAgreeWithFloat(10**4, seed=20240602)


class TestPi2Digits(SimpleTestCase):
    def test_invalid_default(self):
        self.assertRaises(BidiskError, Pi2Digits, default="a")
        self.assertRaises(BidiskError, Pi2Digits, default=0)

    @override_settings(BIDISK_PI2_DIGITS=25)
    def test_default_from_settings(self):
        self.assertEqual(int(Pi2Digits()), 25)
        self.assertEqual(int(Pi2Digits(default=12)), 12)

    def test_override(self):
        before = int(PI2_DIGITS)
        with PI2_DIGITS.override(80):
            self.assertEqual(PI2_DIGITS, 80)
            interval = PiQuadratic.zeta2().enclosure()
            self.assertLessEqual(interval.width, Fraction(1, 6 * 10**80))
        self.assertEqual(int(PI2_DIGITS), before)

    def test_set_and_reset(self):
        digits = Pi2Digits(default=10)
        digits.set(30)
        self.assertEqual(int(digits), 30)
        self.assertRaises(BidiskError, digits.set, -1)
        digits.reset()
        self.assertEqual(int(digits), 10)
