import numpy as np

from ..channel import GammaFit, RisChannelSpec, sample_gamma, sample_smallscale_approx
from ..geometry import NetworkBlock, NetworkRealization, SystemParams
from .types import FadingMode


def interference_typical(
    real: NetworkRealization,
    params: SystemParams,
    mode: FadingMode,
    rng: np.random.Generator,
    fit: GammaFit | None = None,
) -> float:
    """Received interference power at the typical user, in watts.

    Every interferer carries both parts of the split: a fraction rho_i with
    the RIS-aided gain and 1 - rho_i with an Exp(1) direct gain.
    ``fit`` is required in MODEL_FAITHFUL mode.
    """
    distances = np.asarray(real.d_interferers, dtype=float)
    if distances.size == 0:
        return 0.0
    path = params.p_t_watts * params.C_t * distances ** (-params.alpha_t)
    return float(np.sum(path * _split_gain(distances.size, params, mode, fit, rng)))


def interference_typical_block(
    block: NetworkBlock,
    params: SystemParams,
    mode: FadingMode,
    rng: np.random.Generator,
    fit: GammaFit | None = None,
) -> np.ndarray:
    path = params.p_t_watts * params.C_t * block.distances ** (-params.alpha_t)
    contribution = path * _split_gain(block.distances.size, params, mode, fit, rng)
    return np.bincount(block.owner, weights=contribution, minlength=block.trials)


def interference_connected_block(
    block: NetworkBlock,
    params: SystemParams,
    rng: np.random.Generator,
) -> np.ndarray:
    path = params.p_t_watts * params.C_c * block.distances ** (-params.alpha_c)
    contribution = path * rng.exponential(size=block.distances.size)
    return np.bincount(block.owner, weights=contribution, minlength=block.trials)


def ris_interferer_gain(
    size: int,
    spec: RisChannelSpec,
    mode: FadingMode,
    fit: GammaFit | None,
    rng: np.random.Generator,
) -> np.ndarray:
    if mode == FadingMode.MODEL_FAITHFUL:
        if fit is None:
            raise ValueError("model-faithful fading needs a Gamma fit")
        return np.asarray(sample_gamma(fit, rng, size), dtype=float)
    return np.asarray(sample_smallscale_approx(spec, rng, size), dtype=float)


def _split_gain(
    size: int,
    params: SystemParams,
    mode: FadingMode,
    fit: GammaFit | None,
    rng: np.random.Generator,
) -> np.ndarray:
    gain = np.zeros(size, dtype=float)
    if params.rho_i > 0.0:
        gain += params.rho_i * ris_interferer_gain(size, params.channel_spec, mode, fit, rng)
    if params.rho_i < 1.0:
        gain += (1.0 - params.rho_i) * rng.exponential(size=size)
    return gain
