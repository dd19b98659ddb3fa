import math

from ..channel import GammaFit
from ..error import DomainError
from ..geometry import SystemParams
from ..specfn import gauss2f1


def pgfl_excess(alpha: float, shape: float, argument: float) -> float:
    """2F1(-2/alpha, shape; 1 - 2/alpha; -argument) - 1, the normalized PGFL exponent.

    For an interferer field beyond distance A with Gamma(shape)-faded powers,
    integral_A^inf (1 - (1 + s*y**-alpha)**-shape) 2y dy equals
    A**2 * pgfl_excess(alpha, shape, s / A**alpha). At alpha = 2 the integral
    diverges for any positive argument.
    """
    if argument < 0.0:
        raise DomainError("pgfl_excess", f"argument must be >= 0, got {argument}", argument)
    if argument == 0.0:
        return 0.0
    delta = 2.0 / alpha
    if delta >= 1.0:
        return math.inf
    return gauss2f1(-delta, shape, 1.0 - delta, -argument) - 1.0


def laplace_typical(s: float, d_t: float, params: SystemParams, fit: GammaFit) -> float:
    """Laplace transform of the typical user's interference given the serving distance.

    Two factors over the same interferer set: Exp(1)-faded direct links
    weighted 1 - rho_i, and Gamma(a, b)-faded RIS links weighted rho_i.
    """
    if s < 0.0:
        raise DomainError("laplace_typical", f"s must be >= 0, got {s}", s)
    if not d_t > 0.0:
        raise DomainError("laplace_typical", f"d_t must be > 0, got {d_t}", d_t)
    xi1, xi2 = interference_scales(d_t, params, fit)
    area = math.pi * params.lambda_b * d_t * d_t
    exponent = area * pgfl_excess(params.alpha_t, 1.0, xi1 * s)
    exponent += area * pgfl_excess(params.alpha_t, fit.shape_a, xi2 * s)
    return math.exp(-exponent)


def laplace_connected(s: float, params: SystemParams) -> float:
    if s < 0.0:
        raise DomainError("laplace_connected", f"s must be >= 0, got {s}", s)
    xi3 = s * params.p_t_watts * params.C_c / params.r_c**params.alpha_c
    area = math.pi * params.lambda_b * params.r_c**2
    return math.exp(-area * pgfl_excess(params.alpha_c, 1.0, xi3))


def interference_scales(d_t: float, params: SystemParams, fit: GammaFit) -> tuple[float, float]:
    received = params.p_t_watts * params.C_t / d_t**params.alpha_t
    return (1.0 - params.rho_i) * received, fit.scale_b * params.rho_i * received
