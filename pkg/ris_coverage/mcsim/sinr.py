import numpy as np

from ..geometry import SystemParams

Value = float | np.ndarray


def sinr_sic(gain_t: Value, interf: Value, params: SystemParams) -> Value:
    """SINR of the connected user's message at the typical user, before SIC.

    ``gain_t`` already includes path loss: |f_BU|**2 * C_t * d**-alpha_t.
    """
    power = params.p_t_watts * np.asarray(gain_t, dtype=float)
    return _ratio(params.a_c * power, params.a_t * power + interf + params.noise_watts)


def sinr_typical_post_sic(gain_t: Value, interf: Value, params: SystemParams) -> Value:
    power = params.p_t_watts * np.asarray(gain_t, dtype=float)
    return _ratio(params.a_t * power, interf + params.noise_watts)


def sinr_connected(gain_c: Value, interf_c: Value, params: SystemParams) -> Value:
    power = params.p_t_watts * np.asarray(gain_c, dtype=float)
    return _ratio(params.a_c * power, params.a_t * power + interf_c + params.noise_watts)


def _ratio(numerator: np.ndarray, denominator: Value) -> Value:
    num, den = np.broadcast_arrays(np.asarray(numerator, dtype=float), np.asarray(denominator, dtype=float))
    out = np.zeros(num.shape, dtype=float)
    # a zero gain gives zero SINR even without noise or interference
    np.divide(num, den, out=out, where=num > 0.0)
    if out.ndim == 0:
        return float(out)
    return out
