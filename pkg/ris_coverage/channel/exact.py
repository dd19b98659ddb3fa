import logging
import math
from typing import Any, Iterable

import numpy as np

from ..error import ConfigError, DomainError
from ..specfn import InverseLaplaceConfig, inverse_laplace, laplace_of_SK
from .types import DistributionTable

logger = logging.getLogger(__name__)


def exact_pdf_SK(x: float, K: int, cfg: InverseLaplaceConfig) -> float:
    if not x > 0.0:
        raise DomainError("exact_pdf_SK", f"x must be > 0, got {x}", x)
    if K < 1:
        raise DomainError("exact_pdf_SK", f"K must be >= 1, got {K}", K)
    return max(0.0, inverse_laplace(lambda s: laplace_of_SK(s, K), x, cfg))


def exact_cdf_SK(x: float, K: int, cfg: InverseLaplaceConfig) -> float:
    """CDF of S_K, inverted from L(s)/s."""
    if not x > 0.0:
        raise DomainError("exact_cdf_SK", f"x must be > 0, got {x}", x)
    if K < 1:
        raise DomainError("exact_cdf_SK", f"K must be >= 1, got {K}", K)

    def transform(s: Any) -> Any:
        return laplace_of_SK(s, K) / s

    return min(1.0, max(0.0, inverse_laplace(transform, x, cfg)))


def exact_pdf_power(x: float, Lambda: float, K: int, cfg: InverseLaplaceConfig) -> float:
    """Density of Lambda * S_K**2.

    Only the positive root contributes since S_K >= 0:
    f(x) = f_S(sqrt(x/Lambda)) / (2*sqrt(Lambda*x)).
    """
    _check_power_args("exact_pdf_power", x, Lambda)
    return exact_pdf_SK(math.sqrt(x / Lambda), K, cfg) / (2.0 * math.sqrt(Lambda * x))


def exact_cdf_power(x: float, Lambda: float, K: int, cfg: InverseLaplaceConfig) -> float:
    _check_power_args("exact_cdf_power", x, Lambda)
    return exact_cdf_SK(math.sqrt(x / Lambda), K, cfg)


def tabulate_exact_power(
    Lambda: float,
    K: int,
    grid: Iterable[float],
    cfg: InverseLaplaceConfig,
) -> DistributionTable:
    xs = [float(x) for x in grid]
    pdf: list[float] = []
    cdf: list[float] = []
    for x in xs:
        if x == 0.0:
            # Exp(1/Lambda) density at the origin for K = 1, zero otherwise
            pdf.append(1.0 / Lambda if K == 1 else 0.0)
            cdf.append(0.0)
        else:
            pdf.append(exact_pdf_power(x, Lambda, K, cfg))
            cdf.append(exact_cdf_power(x, Lambda, K, cfg))

    # inversion noise can dent the CDF by far less than target_abs_tol
    cdf = np.maximum.accumulate(np.asarray(cdf, dtype=float)).tolist()
    table = DistributionTable(grid=xs, pdf=pdf, cdf=cdf)
    try:
        table.validate()
    except ConfigError as error:
        raise ValueError(f"tabulated law for K={K}, Lambda={Lambda:g} is invalid: {error}") from error
    logger.debug("Tabulated exact law K=%d Lambda=%g on %d points", K, Lambda, len(xs))
    return table


def _check_power_args(function: str, x: float, Lambda: float) -> None:
    if not x > 0.0:
        raise DomainError(function, f"x must be > 0, got {x}", x)
    if not Lambda > 0.0:
        raise DomainError(function, f"Lambda must be > 0, got {Lambda}", Lambda)
