from typing import Callable

import numpy as np
from scipy import stats


def ks_distance(samples: np.ndarray, cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """Kolmogorov-Smirnov distance between ``samples`` and a continuous CDF."""
    values = np.asarray(samples, dtype=float)
    if values.size == 0:
        raise ValueError("Cannot compute KS distance of empty sample")
    return float(stats.kstest(values, cdf).statistic)


def empirical_cdf(samples: np.ndarray, grid: np.ndarray) -> np.ndarray:
    ordered = np.sort(np.asarray(samples, dtype=float))
    if ordered.size == 0:
        raise ValueError("Cannot build empirical CDF of empty sample")
    return np.searchsorted(ordered, grid, side="right") / ordered.size
