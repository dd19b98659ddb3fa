import json
import tomllib
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..channel import FitMode
from ..error import ConfigError
from ..geometry import SystemParams
from ..mcsim import FadingMode

_U64_MAX = 2**64 - 1


class SweepVariable(Enum):
    P_T_DBM = "p_t_dbm"
    N = "n"
    BETA = "beta"
    RHO_I = "rho_i"


class Sweep(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    variable: SweepVariable
    values: list[float] = Field(min_length=1)

    @model_validator(mode="after")
    def validate_values(self) -> "Sweep":
        for i, value in enumerate(self.values):
            if self.variable == SweepVariable.N and (value != int(value) or value < 0):
                raise ValueError(f"sweep value at index {i} is not a valid element count: {value}")
            if self.variable in (SweepVariable.BETA, SweepVariable.RHO_I) and not 0.0 <= value <= 1.0:
                raise ValueError(f"sweep value at index {i} must lie in [0, 1], got {value}")
        return self

    def point(self, value: float) -> dict[str, Any]:
        if self.variable == SweepVariable.N:
            return {"n": int(value)}
        return {self.variable.value: float(value)}


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    params: SystemParams = Field(default_factory=SystemParams)
    sweep: Sweep
    trials: int = Field(default=100_000, ge=1)
    seed: int = Field(default=0, ge=0, le=_U64_MAX)
    fading_mode: FadingMode = FadingMode.MODEL_FAITHFUL
    fit_mode: FitMode = FitMode.MOMENT
    output_path: Path = Path("coverage.csv")

    @field_validator("fading_mode", mode="before")
    @classmethod
    def parse_fading_mode(cls, v: Any) -> Any:
        if isinstance(v, str):
            return FadingMode.parse(v)
        return v

    def params_at(self, value: float) -> SystemParams:
        return self.params.with_changes(**self.sweep.point(value))


_RUN_KEYS = ("trials", "seed", "fading_mode", "fit_mode", "output_path")
_SWEEP_KEYS = {"sweep_variable": "variable", "sweep_values": "values"}


def decode_run_config(text: str) -> RunConfig:
    """Parse a flat TOML run configuration and validate it.

    Keys of SystemParams, the sweep keys and the run keys share one table.
    Thresholds must be feasible here, unlike for SystemParams built in code.
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as error:
        raise ConfigError(f"Failed to parse run configuration: {error}") from error

    sweep_data = {field: data.pop(key) for key, field in _SWEEP_KEYS.items() if key in data}
    run_data = {key: data.pop(key) for key in _RUN_KEYS if key in data}
    try:
        config = RunConfig.model_validate(
            {
                **run_data,
                "params": SystemParams.model_validate(data),
                "sweep": Sweep.model_validate(sweep_data),
            }
        )
    except ValidationError as error:
        raise to_config_error(error) from error

    config.params.check_feasibility()
    return config


def encode_run_config(config: RunConfig) -> str:
    lines: list[str] = []
    for key, value in config.params.model_dump().items():
        lines.append(f"{key} = {_toml_value(value)}")
    lines.append(f"sweep_variable = {_toml_value(config.sweep.variable.value)}")
    lines.append(f"sweep_values = {_toml_value(config.sweep.values)}")
    lines.append(f"trials = {config.trials}")
    lines.append(f"seed = {config.seed}")
    lines.append(f"fading_mode = {_toml_value(config.fading_mode.value)}")
    lines.append(f"fit_mode = {_toml_value(config.fit_mode.value)}")
    lines.append(f"output_path = {_toml_value(str(config.output_path))}")
    return "\n".join(lines) + "\n"


def load_run_config(path: Path) -> RunConfig:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ConfigError(f"Cannot read run configuration {path}: {error}") from error
    return decode_run_config(text)


def _toml_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_toml_value(item) for item in value) + "]"
    raise TypeError(f"Cannot write {type(value).__name__} to a flat configuration")


def to_config_error(error: ValidationError) -> ConfigError:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ()))
    return ConfigError(f"Invalid run configuration: {location}: {first.get('msg')}", field=location or None)
