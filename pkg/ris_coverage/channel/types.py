import csv
import io
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import integrate

from ..error import ConfigError


class FitMode(Enum):
    PAPER = "paper"
    MOMENT = "moment"


@dataclass(frozen=True)
class RisChannelSpec:
    n: int
    beta: float
    A: float = 1.0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ConfigError(f"n must be >= 0, got {self.n}", field="n")
        if not 0.0 <= self.beta <= 1.0:
            raise ConfigError(f"beta must be in [0, 1], got {self.beta}", field="beta")
        if not self.A > 0.0:
            raise ConfigError(f"A must be > 0, got {self.A}", field="A")

    @property
    def K(self) -> int:
        return self.n + 1

    @property
    def weight(self) -> float:
        return self.A * self.beta


@dataclass(frozen=True)
class GammaFit:
    shape_a: float
    scale_b: float

    def __post_init__(self) -> None:
        if not self.shape_a > 0.0:
            raise ConfigError(f"shape_a must be > 0, got {self.shape_a}", field="shape_a")
        if not self.scale_b > 0.0:
            raise ConfigError(f"scale_b must be > 0, got {self.scale_b}", field="scale_b")

    @property
    def mean(self) -> float:
        return self.shape_a * self.scale_b

    @property
    def has_integer_shape(self) -> bool:
        return abs(self.shape_a - round(self.shape_a)) <= 1e-9

    def with_integer_shape(self) -> "GammaFit":
        """Nearest shape >= 1 that is an integer, with the scale moved to keep the mean."""
        shape = max(1, round(self.shape_a))
        return GammaFit(shape_a=float(shape), scale_b=self.mean / shape)


@dataclass
class DistributionTable:
    grid: list[float]
    pdf: list[float]
    cdf: list[float]

    def validate(self) -> None:
        if not self.grid:
            raise ConfigError("distribution table is empty", field="grid")
        if not len(self.grid) == len(self.pdf) == len(self.cdf):
            raise ConfigError("grid, pdf and cdf must have the same length", field="grid")

        grid = np.asarray(self.grid, dtype=float)
        pdf = np.asarray(self.pdf, dtype=float)
        cdf = np.asarray(self.cdf, dtype=float)
        if grid[0] < 0.0 or np.any(np.diff(grid) <= 0.0):
            raise ConfigError("grid must be nonnegative and strictly increasing", field="grid")
        if np.any(pdf < 0.0):
            raise ConfigError("pdf must be nonnegative", field="pdf")
        if np.any(cdf < 0.0) or np.any(cdf > 1.0) or np.any(np.diff(cdf) < 0.0):
            raise ConfigError("cdf must be nondecreasing within [0, 1]", field="cdf")
        if not 0.99 <= cdf[-1] <= 1.0:
            raise ConfigError(f"cdf ends at {cdf[-1]:.6f}, expected [0.99, 1]", field="cdf")
        mass = float(integrate.trapezoid(pdf, grid))
        if abs(mass - 1.0) > 0.01:
            raise ConfigError(f"pdf integrates to {mass:.6f} over the grid", field="pdf")


_TABLE_HEADER = ("x", "pdf", "cdf")


def encode_table_csv(table: DistributionTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_TABLE_HEADER)
    for x, pdf, cdf in zip(table.grid, table.pdf, table.cdf):
        writer.writerow((repr(float(x)), repr(float(pdf)), repr(float(cdf))))
    return buffer.getvalue()


def decode_table_csv(text: str) -> DistributionTable:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != _TABLE_HEADER:
        raise ValueError(f"distribution table CSV must start with header {','.join(_TABLE_HEADER)}")

    grid: list[float] = []
    pdf: list[float] = []
    cdf: list[float] = []
    for line_number, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 3:
            raise ValueError(f"line {line_number}: expected 3 columns, got {len(row)}")
        try:
            x, p, c = (float(cell) for cell in row)
        except ValueError as error:
            raise ValueError(f"line {line_number}: {error}") from error
        if not all(math.isfinite(v) for v in (x, p, c)):
            raise ValueError(f"line {line_number}: non-finite value")
        grid.append(x)
        pdf.append(p)
        cdf.append(c)

    table = DistributionTable(grid=grid, pdf=pdf, cdf=cdf)
    table.validate()
    return table
