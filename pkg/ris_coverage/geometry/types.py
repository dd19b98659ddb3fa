from dataclasses import dataclass, field

import numpy as np


@dataclass
class NetworkRealization:
    d_serving: float
    d_interferers: list[float] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.d_serving > 0.0:
            raise ValueError(f"d_serving must be > 0, got {self.d_serving}")
        previous = self.d_serving
        for distance in self.d_interferers:
            if distance <= self.d_serving:
                raise ValueError(
                    f"interferer at {distance} is not farther than the serving BS at {self.d_serving}"
                )
            if distance < previous:
                raise ValueError("interferer distances must be sorted")
            previous = distance


@dataclass
class NetworkBlock:
    """Many independent realizations in flat arrays.

    ``distances`` holds every interferer distance, grouped by trial and sorted
    within a trial; ``owner`` names the trial each one belongs to.
    """

    d_serving: np.ndarray
    distances: np.ndarray
    owner: np.ndarray

    @property
    def trials(self) -> int:
        return int(self.d_serving.shape[0])

    def realization(self, index: int) -> NetworkRealization:
        mask = self.owner == index
        return NetworkRealization(
            d_serving=float(self.d_serving[index]),
            d_interferers=self.distances[mask].tolist(),
        )
