import math
import threading
from contextlib import contextmanager
from typing import Generator

import mpmath
from scipy import special

from ..error import DomainError

# mpmath keeps its working precision in a process-wide context
_MP_LOCK = threading.RLock()

_PSI_ASYMPTOTIC_FROM = 50.0
_PSI_ASYMPTOTIC_MAX_TERMS = 200


@contextmanager
def mp_precision(dps: int) -> Generator[None, None, None]:
    with _MP_LOCK, mpmath.workdps(dps):
        yield


def erfc(x: float) -> float:
    return float(special.erfc(x))


def erfcx(x: float) -> float:
    return float(special.erfcx(x))


def tricomi_psi_1_half(z: float) -> float:
    """Confluent hypergeometric function of the second kind at a=1, b=1/2.

    Uses 2 - 2*sqrt(pi*z)*erfcx(sqrt(z)), where erfcx(y) = exp(y**2)*erfc(y)
    keeps the product finite. From z = 50 on, the two leading terms cancel to
    the third digit and the asymptotic series (1/z)*sum((3/2)_k*(-1/z)**k)
    is summed instead, stopped at its smallest term.
    """
    if z < 0.0 or math.isnan(z):
        raise DomainError("tricomi_psi_1_half", f"z must be >= 0, got {z}", z)
    if z == 0.0:
        return 2.0
    if math.isinf(z):
        return 0.0
    if z < _PSI_ASYMPTOTIC_FROM:
        root = math.sqrt(z)
        return 2.0 - 2.0 * math.sqrt(math.pi) * root * erfcx(root)

    total = 0.0
    term = 1.0
    for k in range(_PSI_ASYMPTOTIC_MAX_TERMS):
        total += term
        next_term = -term * (k + 1.5) / z
        if abs(next_term) >= abs(term) or abs(next_term) < 1e-17 * abs(total):
            break
        term = next_term
    return total / z


def parabolic_d_minus2(x: float) -> float:
    """Parabolic-cylinder function of order -2.

    D_{-2}(x) = exp(-x**2/4) * integral_0^inf t*exp(-t**2/2 - x*t) dt, which for
    x >= 0 equals exp(-x**2/4)/2 * Psi(1, 1/2; x**2/2).
    """
    if math.isnan(x):
        raise DomainError("parabolic_d_minus2", "x is NaN", x)
    if x >= 0.0:
        return 0.5 * math.exp(-0.25 * x * x) * tricomi_psi_1_half(0.5 * x * x)

    # no cancellation on the negative axis; grows like exp(x**2/4)
    half = math.sqrt(0.5 * math.pi)
    return math.exp(-0.25 * x * x) - x * half * math.exp(0.25 * x * x) * erfc(x / math.sqrt(2.0))


def lower_incomplete_gamma(s: float, x: float) -> float:
    if not s > 0.0:
        raise DomainError("lower_incomplete_gamma", f"s must be > 0, got {s}", s)
    if not x >= 0.0:
        raise DomainError("lower_incomplete_gamma", f"x must be >= 0, got {x}", x)
    if x == 0.0:
        return 0.0
    regularized = float(special.gammainc(s, x))
    if regularized == 0.0:
        return 0.0
    return math.exp(math.log(regularized) + float(special.gammaln(s)))
