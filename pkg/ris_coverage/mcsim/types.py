import math
from dataclasses import dataclass
from enum import Enum

from ..config import CI_Z


class FadingMode(Enum):
    MODEL_FAITHFUL = "model-faithful"
    PHYSICAL = "physical"

    @classmethod
    def parse(cls, text: str) -> "FadingMode":
        return cls(text.strip().lower().replace("_", "-"))


class OwnChannel(Enum):
    APPROX = "approx"
    EXACT = "exact"
    GAMMA = "gamma"


@dataclass(frozen=True)
class CoverageEstimate:
    probability: float
    ci_halfwidth_95: float
    trials: int

    @classmethod
    def from_counts(cls, successes: int, trials: int) -> "CoverageEstimate":
        if trials < 1:
            raise ValueError(f"trials must be >= 1, got {trials}")
        p = successes / trials
        return cls(
            probability=p,
            ci_halfwidth_95=CI_Z * math.sqrt(p * (1.0 - p) / trials),
            trials=trials,
        )
