"""Acceptance suite run by the ``validate`` command.

Each check compares an analytical result with an independent oracle
(quadrature, a closed form or the Monte Carlo simulator) and records the
tolerance and the observed deviation. Informational checks are reported
but never fail the run.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate

from ..analytic import (
    bound_fit,
    coverage_connected,
    coverage_typical_alpha2,
    coverage_typical_alpha4,
    coverage_typical_general,
    i1_alpha2,
    i1_quadrature,
    laplace_connected,
    laplace_connected_pgfl,
    laplace_typical,
    laplace_typical_pgfl,
    laplace_typical_shared_pgfl,
)
from ..channel import FitMode, exact_pdf_SK, fit_gamma, gamma_cdf, sample_smallscale_approx
from ..common import ks_distance
from ..config import (
    CONNECTED_ABS_TOL,
    CONVOLUTION_PDF_TOL,
    KS_MOMENT_FIT_TOL,
    KS_PAPER_FIT_TOL,
    LAPLACE_REL_TOL,
    RAYLEIGH_PDF_TOL,
    SPECIALIZATION_REL_TOL,
)
from ..error import AcceptanceError, is_numeric_error
from ..geometry import StreamTag, SystemParams, trial_stream
from ..mcsim import CoverageEstimate, estimate_coverage_connected, estimate_coverage_typical
from ..specfn import InverseLaplaceConfig
from .run_config import RunConfig

logger = logging.getLogger(__name__)

KS_SAMPLES = 1_000_000
POWER_SWEEP_DBM = (0.0, 10.0, 20.0, 30.0)
BOUND_ELEMENTS = (5, 10)
BOUND_BETAS = (1.0, 0.8)
TREND_ELEMENTS = tuple(range(1, 11))
TREND_POWER_DBM = 20.0
ZERO_THRESHOLD_MC_FLOOR = 0.999
COMPARISON_HALFWIDTH_FLOOR = 1.5

_GRID_STREAM = 0x5EED


@dataclass(frozen=True)
class CheckResult:
    name: str
    tolerance: float
    observed: float
    passed: bool
    informational: bool = False


@dataclass
class AcceptanceReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failed(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed and not check.informational]

    @property
    def passed(self) -> bool:
        return not self.failed

    def raise_for_failures(self) -> None:
        if self.failed:
            raise AcceptanceError([check.name for check in self.failed])

    def render(self) -> str:
        lines = ["check\ttolerance\tobserved\tresult"]
        for check in self.checks:
            if check.informational:
                result = "info"
            else:
                result = "pass" if check.passed else "FAIL"
            lines.append(f"{check.name}\t{check.tolerance:.3g}\t{check.observed:.6g}\t{result}")
        lines.append("")
        lines.append(f"{len(self.checks) - len(self.failed)}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def run_acceptance(config: RunConfig, workers: int | None = None) -> AcceptanceReport:
    report = AcceptanceReport()
    steps: list[Callable[[RunConfig, int | None], list[CheckResult]]] = [
        check_channel_fit,
        check_exact_law,
        check_laplace_transforms,
        check_specializations,
        check_upper_bound,
        check_connected_exactness,
        check_trends,
        check_trivial_limits,
    ]
    for step in steps:
        logger.info("Running %s", step.__name__)
        for check in step(config, workers):
            logger.info(
                "%s: observed %.6g, tolerance %.3g, %s",
                check.name,
                check.observed,
                check.tolerance,
                "info" if check.informational else ("pass" if check.passed else "FAIL"),
            )
            report.checks.append(check)
    return report


def check_channel_fit(config: RunConfig, _workers: int | None = None) -> list[CheckResult]:
    """KS distance between approximate-sampler draws and both Gamma fits at n=5."""
    spec = config.params.with_changes(n=5, beta=1.0, A=1.0).channel_spec
    rng = trial_stream(config.seed, StreamTag.CHANNEL, 0)
    samples = np.asarray(sample_smallscale_approx(spec, rng, KS_SAMPLES))

    paper = fit_gamma(spec, FitMode.PAPER)
    moment = fit_gamma(spec, FitMode.MOMENT)
    paper_ks = ks_distance(samples, lambda x: np.asarray(gamma_cdf(x, paper)))
    moment_ks = ks_distance(samples, lambda x: np.asarray(gamma_cdf(x, moment)))
    return [
        # the shape-n fit does not match the mean of S_K**2
        CheckResult("channel-ks-paper-fit", KS_PAPER_FIT_TOL, paper_ks, paper_ks <= KS_PAPER_FIT_TOL, True),
        CheckResult("channel-ks-moment-fit", KS_MOMENT_FIT_TOL, moment_ks, moment_ks <= KS_MOMENT_FIT_TOL),
    ]


def check_exact_law(
    _config: RunConfig,
    _workers: int | None = None,
    cfg: InverseLaplaceConfig | None = None,
) -> list[CheckResult]:
    cfg = cfg or InverseLaplaceConfig()
    rayleigh_error = _max_pdf_error(1, np.linspace(0.1, 3.0, 30), lambda t: 2.0 * t * math.exp(-t * t), cfg)
    convolution_error = _max_pdf_error(2, np.linspace(0.2, 4.0, 20), rayleigh_convolution_pdf, cfg)
    return [
        CheckResult("exact-pdf-rayleigh", RAYLEIGH_PDF_TOL, rayleigh_error, rayleigh_error <= RAYLEIGH_PDF_TOL),
        CheckResult(
            "exact-pdf-convolution",
            CONVOLUTION_PDF_TOL,
            convolution_error,
            convolution_error <= CONVOLUTION_PDF_TOL,
        ),
    ]


def _max_pdf_error(
    K: int,
    grid: np.ndarray,
    oracle: Callable[[float], float],
    cfg: InverseLaplaceConfig,
) -> float:
    worst = 0.0
    for t in grid:
        try:
            value = exact_pdf_SK(float(t), K, cfg)
        except Exception as error:
            if not is_numeric_error(error):
                raise
            logger.warning("exact law of S_%d failed at t=%g: %s", K, t, error)
            return math.inf
        worst = max(worst, abs(value - oracle(float(t))))
    return worst


def rayleigh_convolution_pdf(t: float) -> float:
    """Density of the sum of two unit Rayleigh amplitudes by direct convolution."""

    def integrand(u: float) -> float:
        v = t - u
        return 4.0 * u * v * math.exp(-u * u - v * v)

    value, _ = integrate.quad(integrand, 0.0, t, epsabs=1e-13, epsrel=1e-12)
    return value


def check_laplace_transforms(config: RunConfig, _workers: int | None = None) -> list[CheckResult]:
    rng = trial_stream(config.seed, _GRID_STREAM, 0)
    base = config.params
    typical_error = 0.0
    shared_error = 0.0
    connected_error = 0.0
    for _ in range(10):
        params = base.with_changes(rho_i=float(rng.uniform(0.0, 1.0)))
        fit = bound_fit(params, config.fit_mode)
        d_t = float(rng.uniform(10.0, 500.0))
        # s on the scale where the direct-link argument is of order one
        s = float(10.0 ** rng.uniform(-2.0, 1.0)) * d_t**params.alpha_t / (params.p_t_watts * params.C_t)
        closed = laplace_typical(s, d_t, params, fit)
        typical_error = max(typical_error, _relative(closed, laplace_typical_pgfl(s, d_t, params, fit)))
        shared_error = max(shared_error, _relative(closed, laplace_typical_shared_pgfl(s, d_t, params, fit)))

        s_c = float(10.0 ** rng.uniform(-2.0, 1.0)) * params.r_c**params.alpha_c / (params.p_t_watts * params.C_c)
        connected_error = max(
            connected_error,
            _relative(laplace_connected(s_c, params), laplace_connected_pgfl(s_c, params)),
        )

    return [
        CheckResult("laplace-typical", LAPLACE_REL_TOL, typical_error, typical_error <= LAPLACE_REL_TOL),
        CheckResult("laplace-connected", LAPLACE_REL_TOL, connected_error, connected_error <= LAPLACE_REL_TOL),
        CheckResult(
            "laplace-typical-shared-field",
            LAPLACE_REL_TOL,
            shared_error,
            shared_error <= LAPLACE_REL_TOL,
            informational=True,
        ),
    ]


def check_specializations(config: RunConfig, _workers: int | None = None) -> list[CheckResult]:
    rng = trial_stream(config.seed, _GRID_STREAM, 1)
    base = config.params.with_changes(alpha_t=4.0)
    alpha4_error = 0.0
    for _ in range(20):
        threshold = float(10.0 ** rng.uniform(-3.0, -0.5))
        params = base.with_changes(
            p_t_dbm=float(rng.uniform(0.0, 30.0)),
            n=int(rng.integers(1, 7)),
            rho_i=float(rng.uniform(0.0, 1.0)),
            gamma_sic_th=threshold,
            gamma_t_th=threshold,
        )
        fit = bound_fit(params, FitMode.MOMENT)
        general = coverage_typical_general(params, fit)
        closed = coverage_typical_alpha4(params, fit)
        alpha4_error = max(alpha4_error, _relative(general, closed, floor=1e-12))

    # alpha = 2 makes the field diverge, so the closed form is compared term by term
    alpha2_error = 0.0
    for _ in range(20):
        xi1 = float(10.0 ** rng.uniform(-7.0, -3.0))
        xi2 = float(10.0 ** rng.uniform(-9.0, -3.0))
        alpha2_error = max(alpha2_error, _relative(i1_quadrature(xi1, xi2, 2.0), i1_alpha2(xi1, xi2)))
    divergent = base.with_changes(alpha_t=2.0)
    alpha2_coverage = coverage_typical_alpha2(divergent, bound_fit(divergent, FitMode.MOMENT))

    return [
        CheckResult(
            "specialization-alpha4",
            SPECIALIZATION_REL_TOL,
            alpha4_error,
            alpha4_error <= SPECIALIZATION_REL_TOL,
        ),
        CheckResult(
            "specialization-alpha2-i1",
            SPECIALIZATION_REL_TOL,
            alpha2_error,
            alpha2_error <= SPECIALIZATION_REL_TOL,
        ),
        CheckResult("specialization-alpha2-coverage", 0.0, alpha2_coverage, alpha2_coverage == 0.0),
    ]


def check_upper_bound(config: RunConfig, workers: int | None = None) -> list[CheckResult]:
    worst = math.inf
    for n, beta, p_t_dbm in _bound_grid():
        params = config.params.with_changes(n=n, beta=beta, p_t_dbm=p_t_dbm)
        analytic, estimate = _typical_pair(config, params, workers)
        worst = min(worst, analytic - (estimate.probability - 2.0 * comparison_halfwidth(estimate)))
    return [CheckResult("typical-upper-bound", 0.0, worst, worst >= 0.0)]


def check_connected_exactness(config: RunConfig, workers: int | None = None) -> list[CheckResult]:
    worst = 0.0
    for p_t_dbm in POWER_SWEEP_DBM:
        params = config.params.with_changes(p_t_dbm=p_t_dbm)
        estimate = estimate_coverage_connected(params, config.trials, config.seed, workers=workers)
        worst = max(worst, abs(coverage_connected(params) - estimate.probability))
    return [CheckResult("connected-exactness", CONNECTED_ABS_TOL, worst, worst <= CONNECTED_ABS_TOL)]


def check_trends(config: RunConfig, workers: int | None = None) -> list[CheckResult]:
    typical: list[CoverageEstimate] = []
    connected: list[CoverageEstimate] = []
    for n in TREND_ELEMENTS:
        params = config.params.with_changes(n=n, p_t_dbm=TREND_POWER_DBM)
        typical.append(_typical_estimate(config, params, workers))
        connected.append(estimate_coverage_connected(params, config.trials, config.seed, workers=workers))

    # margins are drops beyond the joint CI, positive means a violation
    n_drop = max(
        (before.probability - after.probability) - (comparison_halfwidth(before) + comparison_halfwidth(after))
        for before, after in zip(typical, typical[1:])
    )
    first = connected[0]
    flat = max(
        abs(e.probability - first.probability) - 2.0 * max(comparison_halfwidth(e), comparison_halfwidth(first))
        for e in connected
    )

    beta_drop = -math.inf
    for n in BOUND_ELEMENTS:
        for p_t_dbm in POWER_SWEEP_DBM:
            strong = _typical_estimate(config, config.params.with_changes(n=n, beta=1.0, p_t_dbm=p_t_dbm), workers)
            weak = _typical_estimate(config, config.params.with_changes(n=n, beta=0.8, p_t_dbm=p_t_dbm), workers)
            beta_drop = max(
                beta_drop,
                (weak.probability - strong.probability) - (comparison_halfwidth(weak) + comparison_halfwidth(strong)),
            )

    return [
        CheckResult("trend-typical-nondecreasing-in-n", 0.0, n_drop, n_drop <= 0.0),
        CheckResult("trend-connected-flat-in-n", 0.0, flat, flat <= 0.0),
        CheckResult("trend-beta-dominance", 0.0, beta_drop, beta_drop <= 0.0),
    ]


def check_trivial_limits(config: RunConfig, workers: int | None = None) -> list[CheckResult]:
    free = config.params.with_changes(gamma_sic_th=0.0, gamma_t_th=0.0, gamma_c_th=0.0)
    analytic_free, estimate_free = _typical_pair(config, free, workers)
    connected_free = estimate_coverage_connected(free, config.trials, config.seed, workers=workers)
    analytic_gap = max(abs(1.0 - analytic_free), abs(1.0 - coverage_connected(free)))
    mc_free = min(estimate_free.probability, connected_free.probability)

    ceiling = config.params.sic_limit
    blocked = config.params.with_changes(gamma_sic_th=2.0 * ceiling, gamma_c_th=2.0 * ceiling)
    analytic_blocked, estimate_blocked = _typical_pair(config, blocked, workers)
    connected_blocked = estimate_coverage_connected(blocked, config.trials, config.seed, workers=workers)
    blocked_max = max(
        analytic_blocked,
        estimate_blocked.probability,
        coverage_connected(blocked),
        connected_blocked.probability,
    )

    return [
        CheckResult("limit-zero-threshold-analytic", 1e-9, analytic_gap, analytic_gap <= 1e-9),
        CheckResult("limit-zero-threshold-mc", ZERO_THRESHOLD_MC_FLOOR, mc_free, mc_free >= ZERO_THRESHOLD_MC_FLOOR),
        CheckResult("limit-infeasible-threshold", 0.0, blocked_max, blocked_max == 0.0),
    ]


def comparison_halfwidth(estimate: CoverageEstimate) -> float:
    """Half-width used when comparing an estimate with a bound or another estimate.

    The Wald half-width is zero at p_hat in {0, 1}; it is floored at
    1.5/trials so a saturated estimate still carries sampling slack.
    """
    return max(estimate.ci_halfwidth_95, COMPARISON_HALFWIDTH_FLOOR / estimate.trials)


def _bound_grid() -> list[tuple[int, float, float]]:
    return [(n, beta, p) for n in BOUND_ELEMENTS for beta in BOUND_BETAS for p in POWER_SWEEP_DBM]


def _typical_pair(
    config: RunConfig,
    params: SystemParams,
    workers: int | None,
) -> tuple[float, CoverageEstimate]:
    fit = bound_fit(params, config.fit_mode)
    if params.alpha_t == 4.0:
        analytic = coverage_typical_alpha4(params, fit)
    else:
        analytic = coverage_typical_general(params, fit)
    estimate = estimate_coverage_typical(
        params,
        config.trials,
        config.fading_mode,
        config.seed,
        fit=fit,
        workers=workers,
    )
    return analytic, estimate


def _typical_estimate(config: RunConfig, params: SystemParams, workers: int | None) -> CoverageEstimate:
    return estimate_coverage_typical(
        params,
        config.trials,
        config.fading_mode,
        config.seed,
        fit=bound_fit(params, config.fit_mode),
        workers=workers,
    )


def _relative(value: float, reference: float, floor: float = 0.0) -> float:
    scale = max(abs(reference), floor)
    if scale == 0.0:
        return abs(value - reference)
    return abs(value - reference) / scale
