import csv
import io
import math
from dataclasses import astuple, dataclass, fields
from typing import Any, Iterable, TypeVar

from ..mcsim import CoverageEstimate


@dataclass
class EstimateRow:
    param_swept: str
    value: float
    p_hat: float
    ci95: float
    trials: int

    @classmethod
    def from_estimate(cls, param_swept: str, value: float, estimate: CoverageEstimate) -> "EstimateRow":
        return cls(
            param_swept=param_swept,
            value=value,
            p_hat=estimate.probability,
            ci95=estimate.ci_halfwidth_95,
            trials=estimate.trials,
        )


@dataclass
class AnalyticRow:
    param_swept: str
    value: float
    p_analytic: float


@dataclass
class SweepRow:
    value: float
    p_t_analytic: float
    p_c_analytic: float
    p_t_mc: float
    p_t_ci: float
    p_c_mc: float
    p_c_ci: float
    flag: str = ""


@dataclass
class ChannelCdfRow:
    n: int
    beta: float
    x: float
    cdf_empirical: float
    cdf_gamma: float
    cdf_exact: float
    status: str = ""


Row = TypeVar("Row", EstimateRow, AnalyticRow, SweepRow, ChannelCdfRow)


def encode_rows(rows: Iterable[Row], row_type: type[Row]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(field.name for field in fields(row_type))
    for row in rows:
        writer.writerow(format_cell(cell) for cell in astuple(row))
    return buffer.getvalue()


def decode_rows(text: str, row_type: type[Row]) -> list[Row]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    names = [field.name for field in fields(row_type)]
    if header != names:
        raise ValueError(f"expected header {','.join(names)}, got {header}")

    rows: list[Row] = []
    for line_number, cells in enumerate(reader, start=2):
        if not cells:
            continue
        if len(cells) != len(names):
            raise ValueError(f"line {line_number}: expected {len(names)} columns, got {len(cells)}")
        values = [
            _parse_cell(cell, field.type)
            for cell, field in zip(cells, fields(row_type))
        ]
        rows.append(row_type(*values))
    return rows


def format_cell(cell: Any) -> str:
    if isinstance(cell, bool):
        return str(int(cell))
    if isinstance(cell, int):
        return str(cell)
    if isinstance(cell, float):
        if math.isnan(cell):
            return ""
        if cell.is_integer() and abs(cell) < 1e15:
            return str(int(cell))
        return repr(cell)
    return str(cell)


def _parse_cell(cell: str, kind: Any) -> Any:
    if kind in (int, "int"):
        return int(cell)
    if kind in (float, "float"):
        return math.nan if cell == "" else float(cell)
    return cell
