import logging
import math
import warnings
from typing import Callable

from scipy import integrate, optimize

from ..channel import FitMode, GammaFit, alzer_eta, fit_gamma
from ..error import ConvergenceError, DomainError
from ..geometry import SystemParams
from ..specfn import erfcx
from .laplace import laplace_typical, pgfl_excess
from .types import ConnectedCoverageTerms, QuadratureConfig, TypicalCoverageTerms

logger = logging.getLogger(__name__)


def upsilon(params: SystemParams) -> float:
    return max(
        params.gamma_sic_th / params.sic_margin(params.gamma_sic_th),
        params.gamma_t_th / params.a_t,
    )


def xi1_closed_form(params: SystemParams, fit: GammaFit, k: int) -> float:
    """Xi_1 written as pi*lambda*2F1(direct) + pi*lambda*(2F1(RIS) - 1)."""
    area = math.pi * params.lambda_b
    scaled = k * alzer_eta(fit) * upsilon(params)
    direct = pgfl_excess(params.alpha_t, 1.0, scaled * (1.0 - params.rho_i)) + 1.0
    ris = pgfl_excess(params.alpha_t, fit.shape_a, scaled * fit.scale_b * params.rho_i)
    return area * direct + area * ris


def xi1_from_laplace(params: SystemParams, fit: GammaFit, k: int, d_t: float = 1.0) -> float:
    """Xi_1 recovered from the interference transform at s = k*eta*Upsilon*d**alpha/(P*C_t).

    At that abscissa the exponent is d**2*(Xi_1 - pi*lambda) for every d.
    """
    s = k * alzer_eta(fit) * upsilon(params) * d_t**params.alpha_t / (params.p_t_watts * params.C_t)
    value = laplace_typical(s, d_t, params, fit)
    if value == 0.0:
        return math.inf
    return -math.log(value) / (d_t * d_t) + math.pi * params.lambda_b


def bound_fit(params: SystemParams, mode: FitMode) -> GammaFit:
    """Gamma surrogate for the typical-user bound, which needs an integer shape."""
    fit = fit_gamma(params.channel_spec, mode)
    if mode == FitMode.MOMENT:
        fit = fit.with_integer_shape()
    return fit


def typical_coverage_terms(params: SystemParams, fit: GammaFit) -> TypicalCoverageTerms:
    if not fit.has_integer_shape:
        raise DomainError(
            "typical_coverage_terms",
            f"the bound needs an integer Gamma shape, got {fit.shape_a}",
            fit.shape_a,
        )
    shape = round(fit.shape_a)
    eta = alzer_eta(fit)
    ups = upsilon(params)
    terms = TypicalCoverageTerms(upsilon=ups, eta_t=eta, shape=shape)
    for k in range(1, shape + 1):
        terms.xi1.append(xi1_closed_form(params, fit, k))
        terms.xi2.append(k * eta * ups * params.noise_watts / (params.p_t_watts * params.C_t))
    return terms


def connected_coverage_terms(params: SystemParams) -> ConnectedCoverageTerms:
    threshold = params.gamma_c_th
    margin = params.sic_margin(threshold)
    ratio = threshold / margin
    return ConnectedCoverageTerms(
        xi3=ratio * params.noise_watts / (params.p_t_watts * params.C_c),
        xi4=math.pi * params.lambda_b * pgfl_excess(params.alpha_c, 1.0, ratio),
    )


def i1_quadrature(
    xi1: float,
    xi2: float,
    alpha: float,
    cfg: QuadratureConfig | None = None,
) -> float:
    """integral_0^inf x*exp(-xi1*x**2 - xi2*x**alpha) dx by adaptive quadrature.

    The variable is rescaled so the dominant exponent is of order one, and the
    range is cut where the integrand falls below cfg.tail_ratio of its peak.
    """
    cfg = cfg or QuadratureConfig()
    if math.isinf(xi1) or math.isinf(xi2):
        return 0.0
    if xi1 < 0.0 or xi2 < 0.0 or (xi1 == 0.0 and xi2 == 0.0):
        raise DomainError("i1_quadrature", f"needs xi1, xi2 >= 0 not both zero, got {xi1}, {xi2}")

    unit = 1.0 / math.sqrt(xi1) if xi1 > 0.0 else xi2 ** (-1.0 / alpha)
    p = xi1 * unit * unit
    q = xi2 * unit**alpha

    def log_integrand(t: float) -> float:
        return math.log(t) - p * t * t - q * t**alpha

    def integrand(t: float) -> float:
        return t * math.exp(-p * t * t - q * t**alpha)

    # log-integrand is concave: its slope 1/t - 2pt - alpha*q*t**(alpha-1) changes sign once
    def slope(t: float) -> float:
        return 1.0 - 2.0 * p * t * t - alpha * q * t**alpha

    upper = 1.0
    while slope(upper) > 0.0:
        upper *= 2.0
    peak = optimize.brentq(slope, 0.0, upper, xtol=1e-14)
    cutoff = log_integrand(peak) + math.log(cfg.tail_ratio)
    end = 2.0 * peak
    while log_integrand(end) > cutoff:
        end *= 2.0

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, abserr = integrate.quad(
            integrand,
            0.0,
            end,
            points=[peak],
            epsabs=0.0,
            epsrel=cfg.epsrel,
            limit=cfg.limit,
        )
    if abserr > cfg.accept_rel * abs(value):
        raise ConvergenceError("i1_quadrature", [value, abserr], cfg.accept_rel)
    logger.debug("I1 quadrature on [0, %g] x %g: %g (+/- %g)", end, unit, value, abserr)
    return value * unit * unit


def i1_alpha2(xi1: float, xi2: float) -> float:
    total = xi1 + xi2
    if not total > 0.0:
        raise DomainError("i1_alpha2", f"needs xi1 + xi2 > 0, got {total}")
    return 0.5 / total


def i1_alpha4(xi1: float, xi2: float) -> float:
    """(1/4)*sqrt(pi/xi2)*exp(xi1**2/(4*xi2))*erfc(xi1/(2*sqrt(xi2))), via erfcx."""
    if math.isinf(xi1):
        return 0.0
    if not xi2 > 0.0:
        raise DomainError("i1_alpha4", f"the closed form needs xi2 > 0, got {xi2}", xi2)
    root = math.sqrt(xi2)
    return 0.25 * math.sqrt(math.pi) / root * erfcx(xi1 / (2.0 * root))


def coverage_typical_general(
    params: SystemParams,
    fit: GammaFit,
    quad_cfg: QuadratureConfig | None = None,
) -> float:
    """Upper bound on the typical user's joint SIC and decoding coverage.

    2*pi*lambda * sum_k (-1)**(k+1) C(a, k) I1(Xi_1(k), Xi_2(k)) with I1 by
    quadrature. Needs an integer Gamma shape; infeasible SIC thresholds give 0.
    """

    def i1(xi1: float, xi2: float) -> float:
        return i1_quadrature(xi1, xi2, params.alpha_t, quad_cfg)

    return _typical_sum("coverage_typical_general", params, fit, i1)


def coverage_typical_alpha2(params: SystemParams, fit: GammaFit) -> float:
    if params.alpha_t != 2.0:
        raise DomainError("coverage_typical_alpha2", f"needs alpha_t = 2, got {params.alpha_t}")

    def i1(xi1: float, xi2: float) -> float:
        return 0.0 if math.isinf(xi1) else i1_alpha2(xi1, xi2)

    return _typical_sum("coverage_typical_alpha2", params, fit, i1)


def coverage_typical_alpha4(params: SystemParams, fit: GammaFit) -> float:
    if params.alpha_t != 4.0:
        raise DomainError("coverage_typical_alpha4", f"needs alpha_t = 4, got {params.alpha_t}")

    def i1(xi1: float, xi2: float) -> float:
        if xi2 > 0.0:
            return i1_alpha4(xi1, xi2)
        logger.debug("Xi_2 = 0 at alpha_t = 4, using quadrature")
        return i1_quadrature(xi1, xi2, 4.0)

    return _typical_sum("coverage_typical_alpha4", params, fit, i1)


def coverage_connected(params: SystemParams) -> float:
    if not params.is_feasible(params.gamma_c_th):
        logger.warning(
            "gamma_c_th=%g is not below a_c/a_t=%g, connected coverage is 0",
            params.gamma_c_th,
            params.sic_limit,
        )
        return 0.0
    terms = connected_coverage_terms(params)
    return math.exp(-terms.xi3 * params.r_c**params.alpha_c) * math.exp(-terms.xi4 * params.r_c**2)


def _typical_sum(
    function: str,
    params: SystemParams,
    fit: GammaFit,
    i1: Callable[[float, float], float],
) -> float:
    if not params.is_feasible(params.gamma_sic_th):
        logger.warning(
            "%s: gamma_sic_th=%g is not below a_c/a_t=%g, typical coverage is 0",
            function,
            params.gamma_sic_th,
            params.sic_limit,
        )
        return 0.0
    terms = typical_coverage_terms(params, fit)
    total = 0.0
    for k in range(1, terms.shape + 1):
        sign = 1.0 if k % 2 else -1.0
        total += sign * math.comb(terms.shape, k) * i1(terms.xi1[k - 1], terms.xi2[k - 1])
    value = 2.0 * math.pi * params.lambda_b * total
    return min(1.0, max(0.0, value))
