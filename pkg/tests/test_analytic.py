import math
import unittest

from ris_coverage.analytic import (
    QuadratureConfig,
    bound_fit,
    connected_coverage_terms,
    coverage_connected,
    coverage_typical_alpha2,
    coverage_typical_alpha4,
    coverage_typical_general,
    i1_alpha2,
    i1_alpha4,
    i1_quadrature,
    laplace_connected,
    laplace_connected_pgfl,
    laplace_typical,
    laplace_typical_pgfl,
    laplace_typical_shared_pgfl,
    pgfl_excess,
    typical_coverage_terms,
    upsilon,
    xi1_from_laplace,
    xi1_closed_form,
)
from ris_coverage.channel import FitMode, GammaFit
from ris_coverage.error import DomainError
from ris_coverage.geometry import SystemParams


class TestPgfl(unittest.TestCase):
    def test_exponential_closed_form(self):
        # 2F1(-1/2, 1; 1/2; -x) = 1 + sqrt(x)*arctan(sqrt(x))
        for x in (0.01, 1.0, 30.0, 1e5):
            with self.subTest(x=x):
                expected = math.sqrt(x) * math.atan(math.sqrt(x))
                self.assertAlmostEqual(pgfl_excess(4.0, 1.0, x) / expected, 1.0, delta=1e-12)

    def test_edges(self):
        self.assertEqual(pgfl_excess(4.0, 3.0, 0.0), 0.0)
        self.assertEqual(pgfl_excess(2.0, 1.0, 0.5), math.inf)
        with self.assertRaises(DomainError):
            pgfl_excess(4.0, 1.0, -1.0)


class TestLaplace(unittest.TestCase):
    params = SystemParams()
    fit = bound_fit(SystemParams(), FitMode.MOMENT)

    def test_closed_form_matches_quadrature(self):
        for d_t, ratio, rho_i in ((50.0, 0.1, 0.5), (300.0, 1.0, 0.2), (800.0, 5.0, 0.9), (120.0, 0.5, 0.0)):
            with self.subTest(d_t=d_t, ratio=ratio, rho_i=rho_i):
                params = self.params.with_changes(rho_i=rho_i)
                s = ratio * d_t**4 / params.p_t_watts
                closed = laplace_typical(s, d_t, params, self.fit)
                reference = laplace_typical_pgfl(s, d_t, params, self.fit)
                self.assertAlmostEqual(closed / reference, 1.0, delta=1e-6)

    def test_shared_field_transform(self):
        # 1 - u*w <= (1 - u) + (1 - w) on [0, 1]
        s = 0.5 * 300.0**4 / self.params.p_t_watts
        split = laplace_typical(s, 300.0, self.params, self.fit)
        shared = laplace_typical_shared_pgfl(s, 300.0, self.params, self.fit)
        self.assertGreaterEqual(shared, split)
        self.assertLessEqual(shared, 1.0)

    def test_connected(self):
        for ratio in (0.01, 0.3, 4.0):
            with self.subTest(ratio=ratio):
                s = ratio * self.params.r_c**4 / self.params.p_t_watts
                closed = laplace_connected(s, self.params)
                self.assertAlmostEqual(closed / laplace_connected_pgfl(s, self.params), 1.0, delta=1e-6)

    def test_origin(self):
        self.assertEqual(laplace_typical(0.0, 100.0, self.params, self.fit), 1.0)
        self.assertEqual(laplace_connected(0.0, self.params), 1.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            laplace_typical(-1.0, 100.0, self.params, self.fit)
        with self.assertRaises(DomainError):
            laplace_typical(1.0, 0.0, self.params, self.fit)
        with self.assertRaises(DomainError):
            laplace_connected(-1.0, self.params)


class TestCoverageTerms(unittest.TestCase):
    params = SystemParams()

    def test_upsilon(self):
        self.assertAlmostEqual(upsilon(self.params), 0.025)
        strict_sic = self.params.with_changes(gamma_sic_th=1.0)
        self.assertAlmostEqual(upsilon(strict_sic), 1.0 / 0.2)

    def test_xi1_forms_agree(self):
        fit = bound_fit(self.params, FitMode.MOMENT)
        for k in range(1, 7):
            for d_t in (1.0, 250.0):
                with self.subTest(k=k, d_t=d_t):
                    closed = xi1_closed_form(self.params, fit, k)
                    recovered = xi1_from_laplace(self.params, fit, k, d_t)
                    self.assertAlmostEqual(recovered / closed, 1.0, delta=1e-10)

    def test_terms(self):
        fit = bound_fit(self.params, FitMode.PAPER)
        terms = typical_coverage_terms(self.params, fit)
        self.assertEqual(terms.shape, 5)
        self.assertEqual(len(terms.xi1), 5)
        self.assertEqual(terms.xi2, sorted(terms.xi2))
        self.assertAlmostEqual(terms.xi2[1], 2.0 * terms.xi2[0])

    def test_terms_need_integer_shape(self):
        with self.assertRaises(DomainError):
            typical_coverage_terms(self.params, GammaFit(shape_a=5.5, scale_b=5.0))

    def test_connected_terms(self):
        terms = connected_coverage_terms(self.params)
        ratio = 0.01 / (0.6 - 0.01 * 0.4)
        self.assertAlmostEqual(terms.xi3, ratio * 1e-12 / 0.1)
        self.assertEqual(terms.eta_c, 1.0)


class TestDistanceIntegral(unittest.TestCase):
    def test_alpha4_closed_form(self):
        for xi1, xi2 in ((1e-5, 1e-12), (3e-6, 4e-10), (1e-4, 1e-14), (1e-7, 1e-9)):
            with self.subTest(xi1=xi1, xi2=xi2):
                self.assertAlmostEqual(i1_quadrature(xi1, xi2, 4.0) / i1_alpha4(xi1, xi2), 1.0, delta=1e-9)

    def test_alpha2_closed_form(self):
        self.assertAlmostEqual(i1_quadrature(2e-6, 5e-7, 2.0) / i1_alpha2(2e-6, 5e-7), 1.0, delta=1e-9)

    def test_noise_free(self):
        self.assertAlmostEqual(i1_quadrature(4e-6, 0.0, 4.0) * 2.0 * 4e-6, 1.0, delta=1e-10)

    def test_general_exponent(self):
        value = i1_quadrature(1e-5, 1e-13, 3.5, QuadratureConfig(limit=400))
        self.assertGreater(value, 0.0)
        self.assertLess(value, 0.5 / 1e-5)

    def test_large_ratio_does_not_overflow(self):
        # xi1**2/(4*xi2) far beyond the double range of exp
        self.assertAlmostEqual(i1_alpha4(1e3, 1e-6) * 2e3, 1.0, delta=1e-9)

    def test_divergent_field(self):
        self.assertEqual(i1_quadrature(math.inf, 1e-9, 4.0), 0.0)
        self.assertEqual(i1_alpha4(math.inf, 1e-9), 0.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            i1_quadrature(0.0, 0.0, 4.0)
        with self.assertRaises(DomainError):
            i1_alpha4(1e-5, 0.0)
        with self.assertRaises(DomainError):
            i1_alpha2(0.0, 0.0)


class TestTypicalCoverage(unittest.TestCase):
    params = SystemParams()

    def test_general_matches_alpha4(self):
        for changes in ({}, {"p_t_dbm": 0.0, "n": 2}, {"p_t_dbm": 30.0, "rho_i": 0.9}, {"gamma_t_th": 0.3}):
            with self.subTest(changes=changes):
                params = self.params.with_changes(**changes)
                fit = bound_fit(params, FitMode.MOMENT)
                general = coverage_typical_general(params, fit)
                closed = coverage_typical_alpha4(params, fit)
                self.assertAlmostEqual(general, closed, delta=1e-9 * max(closed, 1e-3))

    def test_range_and_trends(self):
        fit = bound_fit(self.params, FitMode.MOMENT)
        values = [
            coverage_typical_alpha4(self.params.with_changes(p_t_dbm=p), fit)
            for p in (0.0, 10.0, 20.0, 30.0)
        ]
        self.assertTrue(all(0.0 <= v <= 1.0 for v in values))
        self.assertEqual(values, sorted(values))

        strict = coverage_typical_alpha4(self.params.with_changes(gamma_t_th=0.5), fit)
        self.assertLess(strict, values[2])

    def test_zero_thresholds(self):
        params = self.params.with_changes(gamma_sic_th=0.0, gamma_t_th=0.0)
        fit = bound_fit(params, FitMode.MOMENT)
        self.assertAlmostEqual(coverage_typical_alpha4(params, fit), 1.0, delta=1e-9)
        self.assertAlmostEqual(coverage_typical_general(params, fit), 1.0, delta=1e-9)

        flat = params.with_changes(alpha_t=2.0)
        self.assertAlmostEqual(coverage_typical_alpha2(flat, fit), 1.0, delta=1e-12)

    def test_divergent_field_gives_zero(self):
        params = self.params.with_changes(alpha_t=2.0)
        fit = bound_fit(params, FitMode.MOMENT)
        self.assertEqual(coverage_typical_alpha2(params, fit), 0.0)

    def test_infeasible(self):
        params = self.params.with_changes(gamma_sic_th=1.5)
        fit = bound_fit(params, FitMode.MOMENT)
        with self.assertLogs("ris_coverage.analytic", level="WARNING"):
            self.assertEqual(coverage_typical_alpha4(params, fit), 0.0)

    def test_wrong_specialization(self):
        fit = bound_fit(self.params, FitMode.MOMENT)
        with self.assertRaises(DomainError):
            coverage_typical_alpha2(self.params, fit)
        with self.assertRaises(DomainError):
            coverage_typical_alpha4(self.params.with_changes(alpha_t=3.0), fit)


class TestConnectedCoverage(unittest.TestCase):
    params = SystemParams()

    def test_matches_transform(self):
        threshold = self.params.gamma_c_th / self.params.sic_margin(self.params.gamma_c_th)
        s = threshold * self.params.r_c**4 / self.params.p_t_watts
        expected = math.exp(-s * self.params.noise_watts) * laplace_connected(s, self.params)
        self.assertAlmostEqual(coverage_connected(self.params), expected, delta=1e-14)

    def test_limits(self):
        free = self.params.with_changes(gamma_c_th=0.0)
        self.assertEqual(coverage_connected(free), 1.0)
        with self.assertLogs("ris_coverage.analytic", level="WARNING"):
            self.assertEqual(coverage_connected(self.params.with_changes(gamma_c_th=2.0)), 0.0)

    def test_independent_of_elements(self):
        self.assertEqual(coverage_connected(self.params), coverage_connected(self.params.with_changes(n=10)))


if __name__ == "__main__":
    unittest.main()
