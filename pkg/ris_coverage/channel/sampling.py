import math

import numpy as np

from .types import GammaFit, RisChannelSpec

# 2x*exp(-x**2) is numpy's Rayleigh law with scale 1/sqrt(2)
RAYLEIGH_SCALE = 1.0 / math.sqrt(2.0)

Draw = float | np.ndarray


def sample_rayleigh(rng: np.random.Generator, size: int | tuple[int, ...] | None = None) -> Draw:
    return rng.rayleigh(scale=RAYLEIGH_SCALE, size=size)


def sample_smallscale_exact(
    spec: RisChannelSpec,
    rng: np.random.Generator,
    size: int | None = None,
) -> Draw:
    """Coherent power gain with the direct amplitude unweighted.

    Each draw is (A*beta*(c_1 + ... + c_n) + c_0)**2 with i.i.d. unit
    Rayleigh amplitudes.
    """
    shape = (1 if size is None else size, spec.n)
    reflected = sample_rayleigh(rng, shape).sum(axis=1)
    direct = sample_rayleigh(rng, shape[0])
    gain = (spec.weight * reflected + direct) ** 2
    return float(gain[0]) if size is None else gain


def sample_smallscale_approx(
    spec: RisChannelSpec,
    rng: np.random.Generator,
    size: int | None = None,
) -> Draw:
    """Power gain (A*beta*S_K)**2, S_K a sum of K = n + 1 unit Rayleigh amplitudes."""
    shape = (1 if size is None else size, spec.K)
    total = sample_rayleigh(rng, shape).sum(axis=1)
    gain = (spec.weight * total) ** 2
    return float(gain[0]) if size is None else gain


def sample_gamma(fit: GammaFit, rng: np.random.Generator, size: int | None = None) -> Draw:
    return rng.gamma(shape=fit.shape_a, scale=fit.scale_b, size=size)
