from .acceptance import AcceptanceReport, CheckResult, run_acceptance
from .commands import cmd_channel_cdf, cmd_coverage_sweep, cmd_validate, sweep_point
from .csv_rows import (
    AnalyticRow,
    ChannelCdfRow,
    EstimateRow,
    SweepRow,
    decode_rows,
    encode_rows,
)
from .main import main
from .run_config import (
    RunConfig,
    Sweep,
    SweepVariable,
    decode_run_config,
    encode_run_config,
    load_run_config,
)
