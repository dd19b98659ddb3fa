"""Laplace transforms of the interference by direct quadrature of the PGFL.

These integrate 1 - E[exp(-s * power * y**-alpha)] against the interferer
density without the hypergeometric closed forms, and serve as references
for them.
"""

import math
import warnings
from typing import Callable

import numpy as np
from scipy import integrate

from ..channel import GammaFit
from ..error import ConvergenceError, DomainError
from ..geometry import SystemParams
from .laplace import interference_scales

_EPSREL = 1e-11
_ACCEPT = 1e-8


def laplace_typical_pgfl(s: float, d_t: float, params: SystemParams, fit: GammaFit) -> float:
    """Product of the direct and RIS-aided field transforms, each of density lambda."""
    xi1, xi2 = interference_scales(d_t, params, fit)
    alpha = params.alpha_t
    direct = _annulus_integral(lambda v: _gamma_void(xi1 * s * v**-alpha, 1.0), d_t)
    ris = _annulus_integral(lambda v: _gamma_void(xi2 * s * v**-alpha, fit.shape_a), d_t)
    return math.exp(-2.0 * math.pi * params.lambda_b * (direct + ris))


def laplace_typical_shared_pgfl(s: float, d_t: float, params: SystemParams, fit: GammaFit) -> float:
    """Transform when every interferer carries both weighted parts at once."""
    xi1, xi2 = interference_scales(d_t, params, fit)
    alpha = params.alpha_t

    def void(v: float) -> float:
        x1 = xi1 * s * v**-alpha
        x2 = xi2 * s * v**-alpha
        return -math.expm1(-math.log1p(x1) - fit.shape_a * math.log1p(x2))

    return math.exp(-2.0 * math.pi * params.lambda_b * _annulus_integral(void, d_t))


def laplace_connected_pgfl(s: float, params: SystemParams) -> float:
    xi3 = s * params.p_t_watts * params.C_c / params.r_c**params.alpha_c
    alpha = params.alpha_c
    excess = _annulus_integral(lambda v: _gamma_void(xi3 * v**-alpha, 1.0), params.r_c)
    return math.exp(-2.0 * math.pi * params.lambda_b * excess)


def _gamma_void(x: float, shape: float) -> float:
    # 1 - (1 + x)**-shape
    return -math.expm1(-shape * math.log1p(x))


def _annulus_integral(void: Callable[[float], float], inner: float) -> float:
    """inner**2 * integral_1^inf void(v) v dv, the radial PGFL exponent beyond ``inner``."""
    if not inner > 0.0:
        raise DomainError("pgfl", f"inner radius must be > 0, got {inner}", inner)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, abserr = integrate.quad(
            lambda v: void(v) * v,
            1.0,
            np.inf,
            epsabs=0.0,
            epsrel=_EPSREL,
            limit=400,
        )
    if abserr > _ACCEPT * max(abs(value), 1e-300):
        raise ConvergenceError("pgfl", [value, abserr], _ACCEPT)
    return inner * inner * value
