import math
from functools import lru_cache

import numpy as np
from scipy import special

from ..error import DomainError
from .types import FitMode, GammaFit, RisChannelSpec

Value = float | np.ndarray


def rayleigh_moment(order: int) -> float:
    """E[c**order] for the unit Rayleigh law 2x*exp(-x**2)."""
    return math.gamma(1.0 + 0.5 * order)


@lru_cache(maxsize=256)
def rayleigh_sum_moment(K: int, order: int) -> float:
    """Raw moment E[S_K**order] by binomial convolution of single-amplitude moments."""
    if K < 1:
        raise DomainError("rayleigh_sum_moment", f"K must be >= 1, got {K}", K)
    if order < 0:
        raise DomainError("rayleigh_sum_moment", f"order must be >= 0, got {order}", order)
    if K == 1:
        return rayleigh_moment(order)
    return math.fsum(
        math.comb(order, j) * rayleigh_sum_moment(K - 1, j) * rayleigh_moment(order - j)
        for j in range(order + 1)
    )


def fit_gamma(spec: RisChannelSpec, mode: FitMode) -> GammaFit:
    """Gamma surrogate for the approximate power gain (A*beta*S_K)**2.

    PAPER keeps the shape at the element count and scales by (A*beta)**2.
    MOMENT matches mean and variance, using E[S_K**2] and E[S_K**4].
    """
    if spec.beta == 0.0:
        raise DomainError("fit_gamma", "beta = 0 leaves no reflected power to fit", spec.beta)

    weight2 = spec.weight**2
    if mode == FitMode.PAPER:
        if spec.n < 1:
            raise DomainError("fit_gamma", "paper fit needs n >= 1", spec.n)
        return GammaFit(shape_a=float(spec.n), scale_b=spec.n * weight2)

    mean = weight2 * rayleigh_sum_moment(spec.K, 2)
    second = weight2**2 * rayleigh_sum_moment(spec.K, 4)
    variance = second - mean * mean
    return GammaFit(shape_a=mean * mean / variance, scale_b=variance / mean)


def gamma_pdf(x: Value, fit: GammaFit) -> Value:
    values = _nonnegative("gamma_pdf", x)
    a, b = fit.shape_a, fit.scale_b
    with np.errstate(divide="ignore"):
        log_pdf = special.xlogy(a - 1.0, values) - values / b - special.gammaln(a) - a * math.log(b)
    pdf = np.exp(log_pdf)
    return _output(x, pdf)


def gamma_cdf(x: Value, fit: GammaFit) -> Value:
    values = _nonnegative("gamma_cdf", x)
    return _output(x, special.gammainc(fit.shape_a, values / fit.scale_b))


def alzer_cdf_bound(x: Value, fit: GammaFit) -> Value:
    """Lower bound (1 - exp(-eta*x))**a on the Gamma CDF, eta = (a!)**(-1/a) / b.

    Needs an integer shape; tight at a = 1.
    """
    if not fit.has_integer_shape:
        raise DomainError("alzer_cdf_bound", f"shape must be an integer, got {fit.shape_a}", fit.shape_a)
    values = _nonnegative("alzer_cdf_bound", x)
    a = round(fit.shape_a)
    eta = alzer_eta(fit)
    bound = np.power(-np.expm1(-eta * values), a)
    return _output(x, bound)


def alzer_eta(fit: GammaFit) -> float:
    a = round(fit.shape_a)
    return math.exp(-math.lgamma(a + 1.0) / a) / fit.scale_b


def _nonnegative(function: str, x: Value) -> np.ndarray:
    values = np.asarray(x, dtype=float)
    if np.any(np.isnan(values)) or np.any(values < 0.0):
        raise DomainError(function, "x must be >= 0")
    return values


def _output(x: Value, values: np.ndarray) -> Value:
    if np.ndim(x) == 0:
        return float(values)
    return values
