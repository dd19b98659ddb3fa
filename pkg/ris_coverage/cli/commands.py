import logging
import math
from pathlib import Path

import numpy as np

from ..analytic import bound_fit, coverage_connected, coverage_typical_alpha4, coverage_typical_general
from ..channel import (
    GammaFit,
    exact_cdf_power,
    fit_gamma,
    gamma_cdf,
    sample_smallscale_approx,
)
from ..common import empirical_cdf, save_text, sibling_path, to_path
from ..config import CDF_GRID_POINTS, CDF_GRID_QUANTILE, EXACT_LAW_MAX_K, MIN_VALIDATE_TRIALS
from ..error import ConfigError, is_numeric_error
from ..geometry import StreamTag, SystemParams, trial_stream
from ..mcsim import CoverageEstimate, estimate_coverage_connected, estimate_coverage_typical
from ..specfn import InverseLaplaceConfig
from .acceptance import run_acceptance
from .csv_rows import AnalyticRow, ChannelCdfRow, EstimateRow, SweepRow, encode_rows
from .run_config import RunConfig, SweepVariable

logger = logging.getLogger(__name__)

_NAN_ESTIMATE = CoverageEstimate(probability=math.nan, ci_halfwidth_95=math.nan, trials=0)


def cmd_channel_cdf(config: RunConfig, inverse_cfg: InverseLaplaceConfig | None = None) -> Path:
    if config.sweep.variable not in (SweepVariable.N, SweepVariable.BETA):
        raise ConfigError(
            f"channel-cdf sweeps n or beta, got {config.sweep.variable.value}",
            field="sweep_variable",
        )
    inverse_cfg = inverse_cfg or InverseLaplaceConfig()
    output_path = to_path(config.output_path)

    rows: list[ChannelCdfRow] = []
    for index, value in enumerate(config.sweep.values):
        params = config.params_at(value)
        rows.extend(_channel_cdf_rows(config, params, index, inverse_cfg))

    save_text(encode_rows(rows, ChannelCdfRow), output_path)
    logger.info("Wrote %d channel CDF rows to %s", len(rows), output_path)
    return output_path


def _channel_cdf_rows(
    config: RunConfig,
    params: SystemParams,
    index: int,
    inverse_cfg: InverseLaplaceConfig,
) -> list[ChannelCdfRow]:
    spec = params.channel_spec
    samples = np.asarray(
        sample_smallscale_approx(spec, trial_stream(config.seed, StreamTag.CHANNEL, index), config.trials)
    )
    top = float(np.quantile(samples, CDF_GRID_QUANTILE))
    grid = np.linspace(0.0, top if top > 0.0 else 1.0, CDF_GRID_POINTS)
    empirical = empirical_cdf(samples, grid)

    status = ""
    try:
        gamma = np.asarray(gamma_cdf(grid, fit_gamma(spec, config.fit_mode)))
    except Exception as error:  # pylint: disable=broad-exception-caught
        if not (is_numeric_error(error) or isinstance(error, ValueError)):
            raise
        logger.warning("No Gamma fit for n=%d beta=%g: %s", spec.n, spec.beta, error)
        gamma = np.full(grid.shape, math.nan)
        status = "no-fit"

    exact = np.full(grid.shape, math.nan)
    Lambda = spec.weight**2
    if spec.K > EXACT_LAW_MAX_K:
        status = _join(status, "exact-skipped")
    elif Lambda == 0.0:
        status = _join(status, "exact-degenerate")

    rows: list[ChannelCdfRow] = []
    for i, x in enumerate(grid):
        row_status = status
        if spec.K <= EXACT_LAW_MAX_K and Lambda > 0.0:
            if x == 0.0:
                exact[i] = 0.0
            else:
                try:
                    exact[i] = exact_cdf_power(float(x), Lambda, spec.K, inverse_cfg)
                except Exception as error:  # pylint: disable=broad-exception-caught
                    if not is_numeric_error(error):
                        raise RuntimeError(f"exact CDF failed at x={x:g}") from error
                    logger.warning("Exact CDF for n=%d beta=%g at x=%g: %s", spec.n, spec.beta, x, error)
                    row_status = _join(row_status, "inverse-laplace-failed")
        rows.append(
            ChannelCdfRow(
                n=spec.n,
                beta=spec.beta,
                x=float(x),
                cdf_empirical=float(empirical[i]),
                cdf_gamma=float(gamma[i]),
                cdf_exact=float(exact[i]),
                status=row_status,
            )
        )
    return rows


def cmd_coverage_sweep(config: RunConfig, workers: int | None = None) -> Path:
    output_path = to_path(config.output_path)
    variable = config.sweep.variable.value

    rows: list[SweepRow] = []
    typical_mc: list[EstimateRow] = []
    connected_mc: list[EstimateRow] = []
    typical_analytic: list[AnalyticRow] = []
    connected_analytic: list[AnalyticRow] = []
    for value in config.sweep.values:
        row, typical, connected = sweep_point(config, value, workers)
        rows.append(row)
        typical_mc.append(EstimateRow.from_estimate(variable, value, typical))
        connected_mc.append(EstimateRow.from_estimate(variable, value, connected))
        typical_analytic.append(AnalyticRow(variable, value, row.p_t_analytic))
        connected_analytic.append(AnalyticRow(variable, value, row.p_c_analytic))
        logger.info(
            "%s=%g: typical %.4f (MC %.4f), connected %.4f (MC %.4f)%s",
            variable,
            value,
            row.p_t_analytic,
            row.p_t_mc,
            row.p_c_analytic,
            row.p_c_mc,
            f" [{row.flag}]" if row.flag else "",
        )

    save_text(encode_rows(rows, SweepRow), output_path)
    save_text(encode_rows(typical_mc, EstimateRow), sibling_path(output_path, "typical.mc"))
    save_text(encode_rows(connected_mc, EstimateRow), sibling_path(output_path, "connected.mc"))
    save_text(encode_rows(typical_analytic, AnalyticRow), sibling_path(output_path, "typical.analytic"))
    save_text(encode_rows(connected_analytic, AnalyticRow), sibling_path(output_path, "connected.analytic"))
    return output_path


def sweep_point(
    config: RunConfig,
    value: float,
    workers: int | None = None,
) -> tuple[SweepRow, CoverageEstimate, CoverageEstimate]:
    params = config.params_at(value)
    flags: list[str] = []
    if not params.is_feasible(params.gamma_sic_th):
        flags.append("infeasible-sic")
    if not params.is_feasible(params.gamma_c_th):
        flags.append("infeasible-connected")

    fit: GammaFit | None = None
    p_t_analytic = math.nan
    typical = _NAN_ESTIMATE
    try:
        fit = bound_fit(params, config.fit_mode)
        if params.alpha_t == 4.0:
            p_t_analytic = coverage_typical_alpha4(params, fit)
        else:
            p_t_analytic = coverage_typical_general(params, fit)
    except Exception as error:  # pylint: disable=broad-exception-caught
        _report(error, flags, "typical-analytic", value)

    try:
        typical = estimate_coverage_typical(
            params,
            config.trials,
            config.fading_mode,
            config.seed,
            fit=fit,
            fit_mode=config.fit_mode,
            workers=workers,
        )
    except Exception as error:  # pylint: disable=broad-exception-caught
        _report(error, flags, "typical-mc", value)

    p_c_analytic = coverage_connected(params)
    connected = estimate_coverage_connected(params, config.trials, config.seed, workers=workers)

    row = SweepRow(
        value=value,
        p_t_analytic=p_t_analytic,
        p_c_analytic=p_c_analytic,
        p_t_mc=typical.probability,
        p_t_ci=typical.ci_halfwidth_95,
        p_c_mc=connected.probability,
        p_c_ci=connected.ci_halfwidth_95,
        flag=";".join(flags),
    )
    return row, typical, connected


def cmd_validate(config: RunConfig, workers: int | None = None) -> int:
    if config.trials < MIN_VALIDATE_TRIALS:
        raise ConfigError(
            f"validate needs trials >= {MIN_VALIDATE_TRIALS}, got {config.trials}",
            field="trials",
        )
    report = run_acceptance(config, workers=workers)
    output_path = to_path(config.output_path)
    save_text(report.render(), output_path)
    for check in report.failed:
        logger.error(
            "Acceptance check failed: %s (observed %s, tolerance %s)",
            check.name,
            check.observed,
            check.tolerance,
        )
    logger.info("Acceptance report written to %s", output_path)
    return 0 if report.passed else 1


def _report(error: Exception, flags: list[str], stage: str, value: float) -> None:
    if not (is_numeric_error(error) or isinstance(error, ValueError)):
        raise RuntimeError(f"{stage} failed at sweep value {value:g}") from error
    logger.warning("%s failed at sweep value %g: %s", stage, value, error)
    flags.append(f"{stage}-error")


def _join(status: str, item: str) -> str:
    return f"{status};{item}" if status else item
