import math
import unittest

import numpy as np

from ris_coverage.analytic import bound_fit, coverage_connected, coverage_typical_alpha4
from ris_coverage.channel import FitMode, GammaFit
from ris_coverage.cli.acceptance import comparison_halfwidth
from ris_coverage.geometry import NetworkRealization, SystemParams, sample_typical_block
from ris_coverage.mcsim import (
    CoverageEstimate,
    FadingMode,
    OwnChannel,
    estimate_coverage_connected,
    estimate_coverage_typical,
    interference_typical,
    interference_typical_block,
    ris_interferer_gain,
    sinr_connected,
    sinr_sic,
    sinr_typical_post_sic,
)


class TestSinr(unittest.TestCase):
    params = SystemParams()

    def test_values(self):
        p = self.params.p_t_watts
        noise = self.params.noise_watts
        self.assertAlmostEqual(sinr_sic(1.0, 0.0, self.params), 0.6 * p / (0.4 * p + noise))
        self.assertAlmostEqual(sinr_typical_post_sic(1e-9, 1e-12, self.params), 0.4 * p * 1e-9 / (1e-12 + noise))
        self.assertAlmostEqual(sinr_connected(2.0, 0.5, self.params), 0.6 * 2.0 * p / (0.4 * 2.0 * p + 0.5 + noise))

    def test_ceiling(self):
        gains = np.logspace(-12, 3, 50)
        values = sinr_sic(gains, 0.0, self.params)
        self.assertTrue(np.all(values < self.params.sic_limit))

    def test_zero_gain(self):
        self.assertEqual(sinr_sic(0.0, 0.0, self.params.with_changes(noise_dbm=-300.0)), 0.0)
        np.testing.assert_array_equal(sinr_connected(np.zeros(3), np.zeros(3), self.params), np.zeros(3))

    def test_scalar_type(self):
        self.assertIsInstance(sinr_typical_post_sic(1.0, 0.0, self.params), float)
        self.assertIsInstance(sinr_sic(np.ones(2), np.zeros(2), self.params), np.ndarray)


class TestInterference(unittest.TestCase):
    def test_empty(self):
        params = SystemParams()
        real = NetworkRealization(d_serving=100.0)
        self.assertEqual(interference_typical(real, params, FadingMode.PHYSICAL, np.random.default_rng(1)), 0.0)

    def test_direct_mean(self):
        params = SystemParams(rho_i=0.0)
        real = NetworkRealization(d_serving=100.0, d_interferers=[200.0, 400.0])
        rng = np.random.default_rng(2)
        draws = [interference_typical(real, params, FadingMode.MODEL_FAITHFUL, rng) for _ in range(40_000)]
        expected = params.p_t_watts * (200.0**-4 + 400.0**-4)
        self.assertAlmostEqual(float(np.mean(draws)) / expected, 1.0, delta=0.02)

    def test_split_mean(self):
        params = SystemParams(rho_i=0.5)
        fit = GammaFit(shape_a=6.0, scale_b=5.0)
        real = NetworkRealization(d_serving=100.0, d_interferers=[300.0])
        rng = np.random.default_rng(3)
        draws = [interference_typical(real, params, FadingMode.MODEL_FAITHFUL, rng, fit) for _ in range(40_000)]
        expected = params.p_t_watts * 300.0**-4 * (0.5 * fit.mean + 0.5)
        self.assertAlmostEqual(float(np.mean(draws)) / expected, 1.0, delta=0.02)

    def test_needs_fit(self):
        params = SystemParams(rho_i=0.5)
        real = NetworkRealization(d_serving=100.0, d_interferers=[300.0])
        with self.assertRaises(ValueError):
            interference_typical(real, params, FadingMode.MODEL_FAITHFUL, np.random.default_rng(4))
        with self.assertRaises(ValueError):
            ris_interferer_gain(3, params.channel_spec, FadingMode.MODEL_FAITHFUL, None, np.random.default_rng(4))

    def test_block(self):
        params = SystemParams()
        rng = np.random.default_rng(5)
        block = sample_typical_block(params, 100, rng)
        interf = interference_typical_block(block, params, FadingMode.PHYSICAL, rng)
        self.assertEqual(interf.shape, (100,))
        self.assertTrue(np.all(interf >= 0.0))
        counts = np.bincount(block.owner, minlength=100)
        self.assertTrue(np.all(interf[counts == 0] == 0.0))


class TestCoverageEstimate(unittest.TestCase):
    def test_from_counts(self):
        estimate = CoverageEstimate.from_counts(50, 100)
        self.assertEqual(estimate.probability, 0.5)
        self.assertAlmostEqual(estimate.ci_halfwidth_95, 1.96 * 0.05)
        self.assertEqual(CoverageEstimate.from_counts(100, 100).ci_halfwidth_95, 0.0)
        with self.assertRaises(ValueError):
            CoverageEstimate.from_counts(0, 0)

    def test_fading_mode_names(self):
        self.assertEqual(FadingMode.parse("model_faithful"), FadingMode.MODEL_FAITHFUL)
        self.assertEqual(FadingMode.parse("Physical"), FadingMode.PHYSICAL)


class TestEstimators(unittest.TestCase):
    params = SystemParams()

    def test_reproducible_across_workers(self):
        kwargs = {"mode": FadingMode.PHYSICAL, "seed": 9, "block_trials": 1000}
        serial = estimate_coverage_typical(self.params, 5000, workers=1, **kwargs)
        threaded = estimate_coverage_typical(self.params, 5000, workers=4, **kwargs)
        self.assertEqual(serial, threaded)
        self.assertEqual(
            estimate_coverage_connected(self.params, 3000, 9, workers=1, block_trials=700),
            estimate_coverage_connected(self.params, 3000, 9, workers=3, block_trials=700),
        )

    def test_zero_thresholds(self):
        params = self.params.with_changes(gamma_sic_th=0.0, gamma_t_th=0.0, gamma_c_th=0.0)
        self.assertEqual(estimate_coverage_typical(params, 2000, FadingMode.PHYSICAL, 1).probability, 1.0)
        self.assertEqual(estimate_coverage_connected(params, 2000, 1).probability, 1.0)

    def test_infeasible_thresholds(self):
        params = self.params.with_changes(gamma_sic_th=1.5, gamma_c_th=2.0)
        self.assertEqual(estimate_coverage_typical(params, 2000, FadingMode.PHYSICAL, 1).probability, 0.0)
        self.assertEqual(estimate_coverage_connected(params, 2000, 1).probability, 0.0)

    def test_own_channel_variants(self):
        for own in OwnChannel:
            with self.subTest(own=own):
                estimate = estimate_coverage_typical(
                    self.params,
                    2000,
                    FadingMode.MODEL_FAITHFUL,
                    2,
                    fit_mode=FitMode.MOMENT,
                    own=own,
                )
                self.assertTrue(0.0 <= estimate.probability <= 1.0)
                self.assertEqual(estimate.trials, 2000)

    def test_bound_holds_for_gamma_model(self):
        params = self.params.with_changes(p_t_dbm=10.0)
        fit = bound_fit(params, FitMode.MOMENT)
        estimate = estimate_coverage_typical(
            params,
            20_000,
            FadingMode.MODEL_FAITHFUL,
            3,
            fit=fit,
            own=OwnChannel.GAMMA,
        )
        analytic = coverage_typical_alpha4(params, fit)
        self.assertGreaterEqual(analytic, estimate.probability - 2.0 * estimate.ci_halfwidth_95)

    def test_connected_matches_closed_form(self):
        for p_t_dbm in (0.0, 20.0):
            with self.subTest(p_t_dbm=p_t_dbm):
                params = self.params.with_changes(p_t_dbm=p_t_dbm)
                estimate = estimate_coverage_connected(params, 20_000, 4)
                self.assertAlmostEqual(estimate.probability, coverage_connected(params), delta=0.02)

    def test_invalid_trials(self):
        with self.assertRaises(ValueError):
            estimate_coverage_connected(self.params, 0, 1)
        with self.assertRaises(ValueError):
            estimate_coverage_connected(self.params, 10, 1, block_trials=0)

    def test_small_trial_counts(self):
        # only validate insists on 10**4 trials
        self.assertEqual(estimate_coverage_connected(self.params, 100, 1).trials, 100)
        self.assertEqual(estimate_coverage_typical(self.params, 100, FadingMode.PHYSICAL, 1).trials, 100)

    def test_default_fit_is_moment_matched(self):
        params = self.params.with_changes(rho_i=0.5)
        self.assertEqual(
            estimate_coverage_typical(params, 2000, FadingMode.MODEL_FAITHFUL, 7),
            estimate_coverage_typical(params, 2000, FadingMode.MODEL_FAITHFUL, 7, fit_mode=FitMode.MOMENT),
        )

    def test_typical_nondecreasing_in_elements(self):
        # noise limited at 0 dBm, so each extra element shows
        estimates = [
            estimate_coverage_typical(
                self.params.with_changes(n=n, p_t_dbm=0.0),
                5000,
                FadingMode.MODEL_FAITHFUL,
                6,
                fit=bound_fit(self.params.with_changes(n=n, p_t_dbm=0.0), FitMode.MOMENT),
            )
            for n in (1, 5, 10)
        ]
        for before, after in zip(estimates, estimates[1:]):
            with self.subTest(before=before, after=after):
                slack = comparison_halfwidth(before) + comparison_halfwidth(after)
                self.assertGreaterEqual(after.probability + slack, before.probability)

    def test_connected_ignores_surface(self):
        first = estimate_coverage_connected(self.params.with_changes(n=1), 5000, 8)
        for changes in ({"n": 10}, {"beta": 0.5}, {"n": 5, "beta": 0.0}):
            with self.subTest(changes=changes):
                estimate = estimate_coverage_connected(self.params.with_changes(**changes), 5000, 8)
                slack = 2.0 * max(comparison_halfwidth(estimate), comparison_halfwidth(first))
                self.assertLessEqual(abs(estimate.probability - first.probability), slack)

    def test_more_power_helps(self):
        low = estimate_coverage_typical(self.params.with_changes(p_t_dbm=0.0), 5000, FadingMode.PHYSICAL, 5)
        high = estimate_coverage_typical(self.params.with_changes(p_t_dbm=30.0), 5000, FadingMode.PHYSICAL, 5)
        self.assertGreaterEqual(high.probability + high.ci_halfwidth_95 + low.ci_halfwidth_95, low.probability)
        self.assertTrue(math.isfinite(high.ci_halfwidth_95))


if __name__ == "__main__":
    unittest.main()
