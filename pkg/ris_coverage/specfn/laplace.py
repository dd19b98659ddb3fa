import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable

import mpmath

from ..config import (
    DEFAULT_INVERSE_LAPLACE_ORDER,
    DEFAULT_INVERSE_LAPLACE_TOL,
    FALLBACK_INVERSE_LAPLACE_ORDER,
)
from ..error import ConfigError, ConvergenceError, DomainError
from .functions import mp_precision, tricomi_psi_1_half

Transform = Callable[[Any], Any]

logger = logging.getLogger(__name__)


class InverseLaplaceMethod(Enum):
    STEHFEST = "stehfest"
    TALBOT = "talbot"
    DEHOOG = "dehoog"


@dataclass(frozen=True)
class InverseLaplaceConfig:
    """Inversion scheme, order and consistency tolerance.

    When the orders of ``method`` disagree, ``fallback`` is tried at
    ``fallback_order`` before giving up. TALBOT bends its contour into the
    left half-plane, where the transform of a Rayleigh sum grows like
    exp(s**2/4), so it is not a default for ``laplace_of_SK``.
    """

    method_order: int = DEFAULT_INVERSE_LAPLACE_ORDER
    target_abs_tol: float = DEFAULT_INVERSE_LAPLACE_TOL
    method: InverseLaplaceMethod = InverseLaplaceMethod.DEHOOG
    fallback: InverseLaplaceMethod | None = InverseLaplaceMethod.STEHFEST
    fallback_order: int = FALLBACK_INVERSE_LAPLACE_ORDER

    def __post_init__(self) -> None:
        for field, order in (("method_order", self.method_order), ("fallback_order", self.fallback_order)):
            if order < 4 or order % 2 != 0:
                raise ConfigError(f"{field} must be an even integer >= 4, got {order}", field=field)
        if not self.target_abs_tol > 0.0:
            raise ConfigError(
                f"target_abs_tol must be > 0, got {self.target_abs_tol}",
                field="target_abs_tol",
            )

    @property
    def check_orders(self) -> tuple[int, ...]:
        return _check_orders(self.method_order)


def _check_orders(order: int) -> tuple[int, ...]:
    orders = (order - 4, order - 2, order)
    return tuple(o for o in orders if o >= 4)


def laplace_of_SK(s: Any, K: int) -> Any:
    """Laplace transform of a sum of K i.i.d. unit Rayleigh amplitudes.

    A single amplitude with density 2x*exp(-x**2) has transform
    exp(s**2/8)*D_{-2}(s/sqrt(2)) = Psi(1, 1/2; s**2/4)/2, and the sum of K
    independent copies has its K-th power. The power is taken as
    exp(K*log(.)) on the combined base, so no exp(s**2/8) factor is ever
    formed on its own.

    mpmath numbers are evaluated in the active mpmath precision, which is
    what the inverse transforms feed in. For those, exp(z**2)*erfc(z) is
    formed as one scaled factor, reflected through erfc(z) = 2 - erfc(-z)
    when Re z < 0.
    """
    if K < 1:
        raise DomainError("laplace_of_SK", f"K must be >= 1, got {K}", K)
    if isinstance(s, (mpmath.mpf, mpmath.mpc)):
        base = 1 - mpmath.sqrt(mpmath.pi) / 2 * s * _scaled_erfc(s / 2)
        return base**K

    s = float(s)
    if s < 0.0:
        raise DomainError("laplace_of_SK", f"s must be >= 0, got {s}", s)
    if s == 0.0:
        return 1.0
    base = 0.5 * tricomi_psi_1_half(0.25 * s * s)
    if base <= 0.0:
        return 0.0
    return math.exp(K * math.log(base))


def _scaled_erfc(z: Any) -> Any:
    # exp(z**2)*erfc(z)
    if mpmath.re(z) >= 0:
        return mpmath.exp(z * z) * mpmath.erfc(z)
    return 2 * mpmath.exp(z * z) - _scaled_erfc(-z)


def inverse_laplace(transform: Transform, t: float, cfg: InverseLaplaceConfig) -> float:
    """Numerical inverse Laplace transform of ``transform`` at ``t``.

    The transform is called with mpmath numbers (real for Gaver-Stehfest,
    complex for the contour and Fourier-series methods). The value is
    computed at each order in ``cfg.check_orders``; if two consecutive orders
    disagree by more than ``cfg.target_abs_tol`` the fallback scheme is run,
    and the result is rejected when it disagrees too.
    """
    if not t > 0.0:
        raise DomainError("inverse_laplace", f"t must be > 0, got {t}", t)
    fallback = cfg.fallback
    if fallback is None or (fallback, cfg.fallback_order) == (cfg.method, cfg.method_order):
        return _invert_checked(transform, t, cfg.method, cfg.check_orders, cfg.target_abs_tol)
    try:
        return _invert_checked(transform, t, cfg.method, cfg.check_orders, cfg.target_abs_tol)
    except ConvergenceError as error:
        logger.debug("%s did not settle at t=%g (%s), trying %s", cfg.method.value, t, error, fallback.value)
    return _invert_checked(transform, t, fallback, _check_orders(cfg.fallback_order), cfg.target_abs_tol)


def _invert_checked(
    transform: Transform,
    t: float,
    method: InverseLaplaceMethod,
    orders: tuple[int, ...],
    tol: float,
) -> float:
    estimates: list[float] = []
    for order in orders:
        if method == InverseLaplaceMethod.STEHFEST:
            value = _stehfest(transform, t, order)
        else:
            value = _mpmath_invert(transform, t, order, method)
        if not math.isfinite(value) or (estimates and abs(value - estimates[-1]) > tol):
            estimates.append(value)
            raise ConvergenceError("inverse_laplace", estimates, tol)
        estimates.append(value)
    return estimates[-1]


@lru_cache(maxsize=None)
def _stehfest_weights(order: int) -> tuple[Fraction, ...]:
    half = order // 2
    weights: list[Fraction] = []
    for k in range(1, order + 1):
        total = Fraction(0)
        for j in range((k + 1) // 2, min(k, half) + 1):
            total += Fraction(
                j**half * math.factorial(2 * j),
                math.factorial(half - j)
                * math.factorial(j)
                * math.factorial(j - 1)
                * math.factorial(k - j)
                * math.factorial(2 * j - k),
            )
        sign = -1 if (k + half) % 2 else 1
        weights.append(sign * total)
    return tuple(weights)


def _working_dps(order: int) -> int:
    return int(1.1 * order) + 15


def _stehfest(transform: Transform, t: float, order: int) -> float:
    weights = _stehfest_weights(order)
    with mp_precision(_working_dps(order)):
        step = mpmath.log(2) / mpmath.mpf(t)
        total = mpmath.mpf(0)
        for k, weight in enumerate(weights, start=1):
            value = transform(k * step)
            total += mpmath.mpf(weight.numerator) / weight.denominator * value
        return float(mpmath.re(step * total))


def _mpmath_invert(
    transform: Transform,
    t: float,
    order: int,
    method: InverseLaplaceMethod,
) -> float:
    with mp_precision(_working_dps(order)):
        value = mpmath.invertlaplace(transform, t, method=method.value, degree=order)
        return float(mpmath.re(value))
