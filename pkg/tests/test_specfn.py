import math
import unittest
from dataclasses import replace

import mpmath
import numpy as np
from scipy import integrate

from ris_coverage.error import ConfigError, ConvergenceError, DomainError
from ris_coverage.specfn import (
    InverseLaplaceConfig,
    InverseLaplaceMethod,
    erfc,
    erfcx,
    gauss2f1,
    inverse_laplace,
    laplace_of_SK,
    lower_incomplete_gamma,
    mp_precision,
    parabolic_d_minus2,
    tricomi_psi_1_half,
)


class TestTricomiPsi(unittest.TestCase):
    def test_origin(self):
        self.assertEqual(tricomi_psi_1_half(0.0), 2.0)

    def test_matches_mpmath_on_both_branches(self):
        """erfcx branch below z = 50, asymptotic series above"""
        for z in (1e-6, 0.3, 1.0, 5.0, 20.0, 49.9, 50.1, 120.0, 1e4):
            with self.subTest(z=z):
                expected = float(mpmath.hyperu(1, 0.5, z))
                self.assertAlmostEqual(tricomi_psi_1_half(z) / expected, 1.0, delta=1e-10)

    def test_decreasing_and_bounded(self):
        values = np.array([tricomi_psi_1_half(float(z)) for z in np.linspace(0.0, 100.0, 1001)])
        self.assertTrue(np.all(np.diff(values) < 0.0))
        self.assertTrue(np.all(values > 0.0))
        self.assertTrue(np.all(values <= 2.0))

    def test_branches_meet(self):
        below = tricomi_psi_1_half(50.0 - 1e-9)
        above = tricomi_psi_1_half(50.0)
        self.assertAlmostEqual(below / above, 1.0, delta=1e-10)

    def test_rejects_negative(self):
        with self.assertRaises(DomainError):
            tricomi_psi_1_half(-1.0)
        with self.assertRaises(DomainError):
            tricomi_psi_1_half(math.nan)


class TestParabolicCylinder(unittest.TestCase):
    def test_matches_mpmath(self):
        for x in (-4.0, -1.0, -0.1, 0.0, 0.5, 2.0, 6.0, 15.0):
            with self.subTest(x=x):
                expected = float(mpmath.pcfd(-2, x))
                self.assertAlmostEqual(parabolic_d_minus2(x) / expected, 1.0, delta=1e-10)

    def test_integral_representation(self):
        x = 1.3
        value, _ = integrate.quad(lambda t: t * math.exp(-0.5 * t * t - x * t), 0.0, math.inf)
        self.assertAlmostEqual(parabolic_d_minus2(x), math.exp(-0.25 * x * x) * value, delta=1e-12)


class TestElementaryFunctions(unittest.TestCase):
    def test_erfc(self):
        self.assertAlmostEqual(erfc(1.0), 0.1572992070502851, delta=1e-15)
        self.assertEqual(erfc(0.0), 1.0)
        # erfc(10) is about 2.1e-45, still a normal double
        self.assertGreater(erfc(10.0), 0.0)
        self.assertLess(erfc(10.0), 1e-44)

    def test_erfcx(self):
        self.assertEqual(erfcx(0.0), 1.0)
        # exp(x**2)*erfc(x) ~ 1/(x*sqrt(pi)) for large x
        self.assertAlmostEqual(erfcx(1e4) * 1e4 * math.sqrt(math.pi), 1.0, delta=1e-8)

    def test_lower_incomplete_gamma(self):
        for x in (0.0, 0.1, 1.0, 7.5):
            with self.subTest(x=x):
                self.assertAlmostEqual(lower_incomplete_gamma(1.0, x), -math.expm1(-x), delta=1e-14)
        self.assertAlmostEqual(lower_incomplete_gamma(3.0, 200.0), 2.0, delta=1e-12)

    def test_lower_incomplete_gamma_by_quadrature(self):
        expected, _ = integrate.quad(lambda t: t**4 * math.exp(-t), 0.0, 5.0, epsabs=0.0, epsrel=1e-13)
        self.assertAlmostEqual(lower_incomplete_gamma(5.0, 5.0) / expected, 1.0, delta=1e-10)

    def test_lower_incomplete_gamma_domain(self):
        with self.assertRaises(DomainError):
            lower_incomplete_gamma(0.0, 1.0)
        with self.assertRaises(DomainError):
            lower_incomplete_gamma(1.0, -1.0)


class TestGauss2F1(unittest.TestCase):
    def test_matches_mpmath(self):
        cases = (
            (-0.5, 1.0, 0.5, -0.3),
            (-0.5, 1.0, 0.5, -0.5),
            (-0.5, 6.0, 0.5, -0.9),
            (-0.5, 6.0, 0.5, -3.0),
            (-0.5, 5.5657, 0.5, -40.0),
            (-0.5, 1.0, 0.5, -1e4),
            (-2.0 / 3.0, 2.0, 1.0 / 3.0, -12.0),
        )
        for a, b, c, z in cases:
            with self.subTest(a=a, b=b, c=c, z=z):
                expected = float(mpmath.hyp2f1(a, b, c, z))
                self.assertAlmostEqual(gauss2f1(a, b, c, z) / expected, 1.0, delta=1e-11)

    def test_symmetric_in_numerator_parameters(self):
        cases = (
            (-0.5, 1.0, 0.5, -0.3),
            (-0.5, 6.0, 0.5, -3.0),
            (-0.5, 5.5657, 0.5, -40.0),
            (-2.0 / 3.0, 2.0, 1.0 / 3.0, -12.0),
        )
        for a, b, c, z in cases:
            with self.subTest(a=a, b=b, c=c, z=z):
                self.assertAlmostEqual(gauss2f1(b, a, c, z) / gauss2f1(a, b, c, z), 1.0, delta=1e-10)

    def test_logarithm_identity(self):
        for z in (-0.2, -0.9, -5.0):
            with self.subTest(z=z):
                self.assertAlmostEqual(gauss2f1(1.0, 1.0, 2.0, z), -math.log1p(-z) / z, delta=1e-13)

    def test_origin(self):
        self.assertEqual(gauss2f1(-0.5, 3.0, 0.5, 0.0), 1.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            gauss2f1(-0.5, 1.0, 0.0, -1.0)
        with self.assertRaises(DomainError):
            gauss2f1(-0.5, 1.0, -2.0, -1.0)
        with self.assertRaises(DomainError):
            gauss2f1(-0.5, 1.0, 0.5, 0.1)
        with self.assertRaises(DomainError):
            gauss2f1(-0.5, 1.0, 0.5, -math.inf)


class TestLaplaceOfSK(unittest.TestCase):
    def test_unit_at_origin(self):
        for K in (1, 3, 8):
            self.assertEqual(laplace_of_SK(0.0, K), 1.0)

    def test_single_amplitude_by_quadrature(self):
        for s in (0.1, 1.0, 4.0, 30.0):
            with self.subTest(s=s):
                expected, _ = integrate.quad(lambda x: 2.0 * x * math.exp(-x * x - s * x), 0.0, math.inf)
                self.assertAlmostEqual(laplace_of_SK(s, 1) / expected, 1.0, delta=1e-9)

    def test_power_of_sum(self):
        s = 2.5
        self.assertAlmostEqual(laplace_of_SK(s, 4), laplace_of_SK(s, 1) ** 4, delta=1e-14)

    def test_mpmath_argument(self):
        with mp_precision(30):
            value = laplace_of_SK(mpmath.mpf("1.5"), 2)
        self.assertAlmostEqual(float(value), laplace_of_SK(1.5, 2), delta=1e-13)

    def test_complex_argument(self):
        with mp_precision(30):
            for s in (mpmath.mpc(1.5, 3.0), mpmath.mpc(-3.0, 2.0), mpmath.mpc(-8.0, -1.0)):
                with self.subTest(s=s):
                    expected = mpmath.quad(lambda x: 2 * x * mpmath.exp(-x * x - s * x), [0, 4, mpmath.inf])
                    self.assertLess(abs(laplace_of_SK(s, 1) / expected - 1), 1e-10)
            # grows like exp(s**2/4) on the negative axis without overflowing
            self.assertTrue(mpmath.isfinite(laplace_of_SK(mpmath.mpf(-60), 2)))

    def test_domain(self):
        with self.assertRaises(DomainError):
            laplace_of_SK(1.0, 0)
        with self.assertRaises(DomainError):
            laplace_of_SK(-1.0, 1)


class TestInverseLaplace(unittest.TestCase):
    def test_exponential(self):
        for method in InverseLaplaceMethod:
            cfg = InverseLaplaceConfig(method=method)
            for t in (0.5, 1.0, 2.0):
                with self.subTest(method=method, t=t):
                    value = inverse_laplace(lambda s: 1 / (s + 1), t, cfg)
                    self.assertAlmostEqual(value, math.exp(-t), delta=1e-7)

    def test_rejects_disagreeing_orders(self):
        # a unit step at t = 1 defeats the real-axis method at the jump
        cfg = InverseLaplaceConfig(target_abs_tol=1e-9, method=InverseLaplaceMethod.STEHFEST, fallback=None)
        with self.assertRaises(ConvergenceError) as context:
            inverse_laplace(lambda s: mpmath.exp(-s) / s, 1.0, cfg)
        self.assertGreaterEqual(len(context.exception.estimates), 2)

    def test_ramp(self):
        self.assertAlmostEqual(inverse_laplace(lambda s: 1 / (s * s), 3.0, InverseLaplaceConfig()), 3.0, delta=1e-6)

    def test_fallback(self):
        # orders 4, 6 and 8 of the real-axis method disagree by more than 1e-6
        cfg = InverseLaplaceConfig(
            method_order=8,
            target_abs_tol=1e-6,
            method=InverseLaplaceMethod.STEHFEST,
            fallback=InverseLaplaceMethod.DEHOOG,
            fallback_order=32,
        )
        self.assertAlmostEqual(inverse_laplace(lambda s: 1 / (s + 1), 1.5, cfg), math.exp(-1.5), delta=1e-7)
        with self.assertRaises(ConvergenceError):
            inverse_laplace(lambda s: 1 / (s + 1), 1.5, replace(cfg, fallback=None))

    def test_config(self):
        self.assertEqual(InverseLaplaceConfig().check_orders, (28, 30, 32))
        self.assertEqual(InverseLaplaceConfig().method, InverseLaplaceMethod.DEHOOG)
        self.assertEqual(InverseLaplaceConfig().fallback, InverseLaplaceMethod.STEHFEST)
        self.assertEqual(InverseLaplaceConfig().fallback_order, 48)
        self.assertEqual(InverseLaplaceConfig(method_order=6).check_orders, (4, 6))
        with self.assertRaises(ConfigError):
            InverseLaplaceConfig(method_order=7)
        with self.assertRaises(ConfigError):
            InverseLaplaceConfig(method_order=2)
        with self.assertRaises(ConfigError):
            InverseLaplaceConfig(fallback_order=7)
        with self.assertRaises(ConfigError):
            InverseLaplaceConfig(target_abs_tol=0.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            inverse_laplace(lambda s: 1 / s, 0.0, InverseLaplaceConfig())

    def test_nested_precision(self):
        with mp_precision(40):
            with mp_precision(20):
                self.assertEqual(mpmath.mp.dps, 20)
            self.assertEqual(mpmath.mp.dps, 40)


if __name__ == "__main__":
    unittest.main()
