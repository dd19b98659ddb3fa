import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..channel import RisChannelSpec
from ..config import (
    DEFAULT_A_C,
    DEFAULT_A_T,
    DEFAULT_ALPHA,
    DEFAULT_BETA,
    DEFAULT_INTERCEPT,
    DEFAULT_LAMBDA_B,
    DEFAULT_N,
    DEFAULT_NOISE_DBM,
    DEFAULT_P_T_DBM,
    DEFAULT_R_C,
    DEFAULT_RHO_I,
    DEFAULT_RU_GAIN,
    DEFAULT_THRESHOLD,
    WINDOW_SCALES,
)
from ..error import InfeasibleThresholdError


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


def default_window_radius(lambda_b: float) -> float:
    return WINDOW_SCALES / math.sqrt(math.pi * lambda_b)


class SystemParams(BaseModel):
    """Network, power, path-loss and threshold constants of one scenario.

    Thresholds may be infeasible (a_c - th*a_t <= 0) on objects built in code;
    ``check_feasibility`` is what config loading calls to reject them.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    lambda_b: float = Field(default=DEFAULT_LAMBDA_B, gt=0.0)
    p_t_dbm: float = DEFAULT_P_T_DBM
    noise_dbm: float = DEFAULT_NOISE_DBM
    alpha_t: float = DEFAULT_ALPHA
    alpha_c: float = DEFAULT_ALPHA
    a_c: float = Field(default=DEFAULT_A_C, gt=0.0, lt=1.0)
    a_t: float = Field(default=DEFAULT_A_T, gt=0.0, lt=1.0)
    n: int = Field(default=DEFAULT_N, ge=0)
    beta: float = Field(default=DEFAULT_BETA, ge=0.0, le=1.0)
    rho_i: float = Field(default=DEFAULT_RHO_I, ge=0.0, le=1.0)
    r_c: float = Field(default=DEFAULT_R_C, gt=0.0)
    A: float = Field(default=DEFAULT_RU_GAIN, gt=0.0)
    C_t: float = Field(default=DEFAULT_INTERCEPT, gt=0.0)
    C_c: float = Field(default=DEFAULT_INTERCEPT, gt=0.0)
    gamma_sic_th: float = Field(default=DEFAULT_THRESHOLD, ge=0.0)
    gamma_t_th: float = Field(default=DEFAULT_THRESHOLD, ge=0.0)
    gamma_c_th: float = Field(default=DEFAULT_THRESHOLD, ge=0.0)
    window_radius: float = Field(default=0.0)

    @model_validator(mode="before")
    @classmethod
    def fill_window_radius(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("window_radius") is None:
            lambda_b = data.get("lambda_b", DEFAULT_LAMBDA_B)
            if isinstance(lambda_b, (int, float)) and lambda_b > 0:
                data = {**data, "window_radius": default_window_radius(float(lambda_b))}
        return data

    @field_validator("alpha_t")
    @classmethod
    def validate_alpha_t(cls, v: float) -> float:
        # alpha_t = 2 is kept as the boundary case of a divergent field
        if v < 2.0:
            raise ValueError(f"alpha_t must be >= 2 for the interference to be finite, got {v}")
        return v

    @field_validator("alpha_c")
    @classmethod
    def validate_alpha_c(cls, v: float) -> float:
        if v <= 2.0:
            raise ValueError(f"alpha_c must be > 2 for the interference to be finite, got {v}")
        return v

    @model_validator(mode="after")
    def validate_power_split(self) -> "SystemParams":
        if abs(self.a_c + self.a_t - 1.0) > 1e-9:
            raise ValueError(f"a_c + a_t must equal 1, got {self.a_c} + {self.a_t}")
        if not self.a_c > self.a_t:
            raise ValueError(f"a_c must exceed a_t, got a_c={self.a_c}, a_t={self.a_t}")
        if not self.window_radius > self.r_c:
            raise ValueError(
                f"window_radius must exceed r_c, got window_radius={self.window_radius}, r_c={self.r_c}"
            )
        return self

    @property
    def p_t_watts(self) -> float:
        return dbm_to_watts(self.p_t_dbm)

    @property
    def noise_watts(self) -> float:
        return dbm_to_watts(self.noise_dbm)

    @property
    def sic_limit(self) -> float:
        return self.a_c / self.a_t

    @property
    def channel_spec(self) -> RisChannelSpec:
        return RisChannelSpec(n=self.n, beta=self.beta, A=self.A)

    def sic_margin(self, threshold: float) -> float:
        return self.a_c - threshold * self.a_t

    def is_feasible(self, threshold: float) -> bool:
        return self.sic_margin(threshold) > 0.0

    def check_feasibility(self) -> None:
        for name in ("gamma_sic_th", "gamma_c_th"):
            threshold = getattr(self, name)
            if not self.is_feasible(threshold):
                raise InfeasibleThresholdError(name, threshold, self.sic_limit)

    def with_changes(self, **changes: Any) -> "SystemParams":
        return SystemParams.model_validate({**self.model_dump(), **changes})
