import math

import mpmath

from ..error import ConvergenceError, DomainError
from .functions import mp_precision

_SERIES_RADIUS = 0.5
_SERIES_MAX_TERMS = 1000
_SERIES_EPS = 1e-17
_MP_DPS = 25


def gauss2f1(a: float, b: float, c: float, z: float) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) on the closed negative axis.

    On [-1/2, 0] the power series converges at least like 2**-k and is summed
    directly. Below that the Pfaff transformation

        2F1(a, b; c; z) = (1 - z)**-a * 2F1(a, c - b; c; z / (z - 1))

    maps the argument into (1/3, 1). Transformed arguments up to 1/2 keep the
    direct series; closer to 1 the series slows down and the mpmath evaluator
    takes over.
    """
    if c <= 0.0 and c == math.floor(c):
        raise DomainError("gauss2f1", f"c must not be a non-positive integer, got {c}", c)
    if math.isnan(z) or z > 0.0:
        raise DomainError("gauss2f1", f"z must be <= 0, got {z}", z)
    if z == 0.0:
        return 1.0
    if math.isinf(z):
        raise DomainError("gauss2f1", "z must be finite", z)

    if z >= -_SERIES_RADIUS:
        return _series(a, b, c, z)

    w = z / (z - 1.0)
    prefactor = math.exp(-a * math.log1p(-z))
    if w <= _SERIES_RADIUS:
        return prefactor * _series(a, c - b, c, w)
    with mp_precision(_MP_DPS):
        value = mpmath.hyp2f1(a, c - b, c, w)
    return prefactor * float(value)


def _series(a: float, b: float, c: float, x: float) -> float:
    total = 1.0
    term = 1.0
    small_run = 0
    for k in range(_SERIES_MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        total += term
        if term == 0.0:
            return total
        if abs(term) <= _SERIES_EPS * abs(total):
            small_run += 1
            if small_run >= 2:
                return total
        else:
            small_run = 0
    raise ConvergenceError("gauss2f1", [total], _SERIES_EPS)
