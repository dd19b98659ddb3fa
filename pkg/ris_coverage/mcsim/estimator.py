import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from ..channel import (
    FitMode,
    GammaFit,
    fit_gamma,
    sample_gamma,
    sample_smallscale_approx,
    sample_smallscale_exact,
)
from ..config import MC_BLOCK_TRIALS
from ..geometry import (
    StreamTag,
    SystemParams,
    sample_connected_block,
    sample_typical_block,
    trial_stream,
)
from .interference import interference_connected_block, interference_typical_block
from .sinr import sinr_connected, sinr_sic, sinr_typical_post_sic
from .types import CoverageEstimate, FadingMode, OwnChannel

logger = logging.getLogger(__name__)


def simulate_typical_block(
    params: SystemParams,
    trials: int,
    mode: FadingMode,
    rng: np.random.Generator,
    fit: GammaFit | None = None,
    own: OwnChannel = OwnChannel.APPROX,
) -> int:
    """Number of trials in which the typical user decodes both messages."""
    block = sample_typical_block(params, trials, rng)
    spec = params.channel_spec
    if own == OwnChannel.APPROX:
        fading = sample_smallscale_approx(spec, rng, trials)
    elif own == OwnChannel.EXACT:
        fading = sample_smallscale_exact(spec, rng, trials)
    else:
        if fit is None:
            raise ValueError("a Gamma own channel needs a fit")
        fading = sample_gamma(fit, rng, trials)

    gain = np.asarray(fading) * params.C_t * block.d_serving ** (-params.alpha_t)
    interf = interference_typical_block(block, params, mode, rng, fit)
    covered = (np.asarray(sinr_sic(gain, interf, params)) > params.gamma_sic_th) & (
        np.asarray(sinr_typical_post_sic(gain, interf, params)) > params.gamma_t_th
    )
    return int(np.count_nonzero(covered))


def simulate_connected_block(params: SystemParams, trials: int, rng: np.random.Generator) -> int:
    block = sample_connected_block(params, trials, rng)
    gain = rng.exponential(size=trials) * params.C_c * params.r_c ** (-params.alpha_c)
    interf = interference_connected_block(block, params, rng)
    covered = np.asarray(sinr_connected(gain, interf, params)) > params.gamma_c_th
    return int(np.count_nonzero(covered))


def estimate_coverage_typical(
    params: SystemParams,
    trials: int,
    mode: FadingMode,
    seed: int,
    fit: GammaFit | None = None,
    fit_mode: FitMode = FitMode.MOMENT,
    own: OwnChannel = OwnChannel.APPROX,
    workers: int | None = None,
    block_trials: int = MC_BLOCK_TRIALS,
) -> CoverageEstimate:
    """Typical-user coverage over ``trials`` seeded trials.

    Any positive trial count is accepted. The 95% interval is only meaningful
    from about 10**4 trials on, which is the floor ``validate`` enforces
    (``MIN_VALIDATE_TRIALS``).
    """
    ris_interference = mode == FadingMode.MODEL_FAITHFUL and params.rho_i > 0.0
    if fit is None and (ris_interference or own == OwnChannel.GAMMA):
        fit = fit_gamma(params.channel_spec, fit_mode)

    def run(size: int, rng: np.random.Generator) -> int:
        return simulate_typical_block(params, size, mode, rng, fit, own)

    successes = _run_blocks(run, StreamTag.TYPICAL, trials, seed, workers, block_trials)
    estimate = CoverageEstimate.from_counts(successes, trials)
    logger.debug(
        "Typical coverage %.6f +/- %.6f over %d trials (P_t=%g dBm, n=%d, beta=%g)",
        estimate.probability,
        estimate.ci_halfwidth_95,
        trials,
        params.p_t_dbm,
        params.n,
        params.beta,
    )
    return estimate


def estimate_coverage_connected(
    params: SystemParams,
    trials: int,
    seed: int,
    workers: int | None = None,
    block_trials: int = MC_BLOCK_TRIALS,
) -> CoverageEstimate:
    """Connected-user coverage; small trial counts are accepted as for the typical user."""

    def run(size: int, rng: np.random.Generator) -> int:
        return simulate_connected_block(params, size, rng)

    successes = _run_blocks(run, StreamTag.CONNECTED, trials, seed, workers, block_trials)
    estimate = CoverageEstimate.from_counts(successes, trials)
    logger.debug(
        "Connected coverage %.6f +/- %.6f over %d trials (P_t=%g dBm)",
        estimate.probability,
        estimate.ci_halfwidth_95,
        trials,
        params.p_t_dbm,
    )
    return estimate


def _run_blocks(
    run: Callable[[int, np.random.Generator], int],
    tag: StreamTag,
    trials: int,
    seed: int,
    workers: int | None,
    block_trials: int,
) -> int:
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if block_trials < 1:
        raise ValueError(f"block_trials must be >= 1, got {block_trials}")

    sizes = [block_trials] * (trials // block_trials)
    if trials % block_trials:
        sizes.append(trials % block_trials)

    def run_block(index: int) -> int:
        return run(sizes[index], trial_stream(seed, tag, index))

    if workers == 1 or len(sizes) == 1:
        counts = [run_block(index) for index in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(run_block, range(len(sizes))))
    return sum(counts)
