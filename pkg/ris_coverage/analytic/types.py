from dataclasses import dataclass, field

from ..config import I1_EPSREL, I1_TAIL_RATIO


@dataclass
class TypicalCoverageTerms:
    upsilon: float
    eta_t: float
    shape: int
    xi1: list[float] = field(default_factory=list)
    xi2: list[float] = field(default_factory=list)


@dataclass
class ConnectedCoverageTerms:
    xi3: float
    xi4: float
    eta_c: float = 1.0


@dataclass(frozen=True)
class QuadratureConfig:
    epsrel: float = I1_EPSREL
    tail_ratio: float = I1_TAIL_RATIO
    limit: int = 200
    accept_rel: float = 1e-10
