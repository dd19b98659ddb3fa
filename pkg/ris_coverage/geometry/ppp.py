import math

import numpy as np

from ..error import DomainError
from .params import SystemParams
from .streams import StreamTag, trial_stream
from .types import NetworkBlock, NetworkRealization

_MAX_EMPTY_REDRAWS = 10_000


def sample_hppp_distances(
    lam: float,
    window_radius: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Sorted distances from the origin of a homogeneous PPP in a disk."""
    count = rng.poisson(lam * math.pi * window_radius**2)
    return np.sort(window_radius * np.sqrt(rng.random(count)))


def nearest_distance_pdf(x: float, n: int, lam: float) -> float:
    """Density of the distance to the n-th nearest point of a planar PPP."""
    if not x > 0.0:
        raise DomainError("nearest_distance_pdf", f"x must be > 0, got {x}", x)
    if n < 1:
        raise DomainError("nearest_distance_pdf", f"n must be >= 1, got {n}", n)
    if not lam > 0.0:
        raise DomainError("nearest_distance_pdf", f"lambda must be > 0, got {lam}", lam)
    scale = math.pi * lam
    log_pdf = (
        math.log(2.0)
        + n * math.log(scale)
        - math.lgamma(n)
        + (2 * n - 1) * math.log(x)
        - scale * x * x
    )
    return math.exp(log_pdf)


def nearest_distance_cdf(x: float, lam: float) -> float:
    if x <= 0.0:
        return 0.0
    return -math.expm1(-math.pi * lam * x * x)


def sample_network(params: SystemParams, rng: np.random.Generator) -> NetworkRealization:
    distances = sample_hppp_distances(params.lambda_b, params.window_radius, rng)
    redraws = 0
    while distances.size == 0:
        redraws += 1
        if redraws > _MAX_EMPTY_REDRAWS:
            raise RuntimeError("window holds no base station in any draw; enlarge window_radius")
        distances = sample_hppp_distances(params.lambda_b, params.window_radius, rng)
    return NetworkRealization(
        d_serving=float(distances[0]),
        d_interferers=distances[1:].tolist(),
    )


def sample_connected_network(params: SystemParams, rng: np.random.Generator) -> NetworkRealization:
    """Interferers of the connected user, an HPPP on the annulus [r_c, R] around it."""
    inner2 = params.r_c**2
    outer2 = params.window_radius**2
    count = rng.poisson(params.lambda_b * math.pi * (outer2 - inner2))
    distances = np.sort(np.sqrt(inner2 + rng.random(count) * (outer2 - inner2)))
    return NetworkRealization(d_serving=params.r_c, d_interferers=distances.tolist())


def sample_network_for_trial(params: SystemParams, seed: int, index: int) -> NetworkRealization:
    return sample_network(params, trial_stream(seed, StreamTag.NETWORK, index))


def sample_typical_block(params: SystemParams, trials: int, rng: np.random.Generator) -> NetworkBlock:
    """``trials`` typical-user realizations at once; empty windows are redrawn."""
    mean = params.lambda_b * math.pi * params.window_radius**2
    counts = rng.poisson(mean, size=trials)
    redraws = 0
    empty = np.flatnonzero(counts == 0)
    while empty.size:
        redraws += 1
        if redraws > _MAX_EMPTY_REDRAWS:
            raise RuntimeError("window holds no base station in any draw; enlarge window_radius")
        counts[empty] = rng.poisson(mean, size=empty.size)
        empty = empty[counts[empty] == 0]

    owner = np.repeat(np.arange(trials), counts)
    radii = params.window_radius * np.sqrt(rng.random(owner.size))
    order = np.lexsort((radii, owner))
    radii = radii[order]

    starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
    is_serving = np.zeros(radii.size, dtype=bool)
    is_serving[starts] = True
    return NetworkBlock(
        d_serving=radii[starts],
        distances=radii[~is_serving],
        owner=owner[~is_serving],
    )


def sample_connected_block(params: SystemParams, trials: int, rng: np.random.Generator) -> NetworkBlock:
    inner2 = params.r_c**2
    outer2 = params.window_radius**2
    counts = rng.poisson(params.lambda_b * math.pi * (outer2 - inner2), size=trials)
    owner = np.repeat(np.arange(trials), counts)
    radii = np.sqrt(inner2 + rng.random(owner.size) * (outer2 - inner2))
    order = np.lexsort((radii, owner))
    return NetworkBlock(
        d_serving=np.full(trials, params.r_c),
        distances=radii[order],
        owner=owner,
    )
