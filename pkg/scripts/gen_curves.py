import time
from pathlib import Path

from ris_coverage.cli import RunConfig, Sweep, SweepVariable, cmd_channel_cdf, cmd_coverage_sweep
from ris_coverage.geometry import SystemParams

_TRIALS = 100_000


def main() -> None:
    project_root = Path(__file__).parent.parent
    output_dir_path = project_root / "analysing" / "curves"

    runs: list[tuple[str, RunConfig]] = [
        (
            "channel CDF over n",
            RunConfig(
                sweep=Sweep(variable=SweepVariable.N, values=[1.0, 2.0, 5.0, 10.0]),
                trials=_TRIALS,
                output_path=output_dir_path / "channel_cdf_n.csv",
            ),
        ),
        (
            "coverage over transmit power",
            RunConfig(
                sweep=Sweep(variable=SweepVariable.P_T_DBM, values=[float(p) for p in range(0, 31, 5)]),
                trials=_TRIALS,
                output_path=output_dir_path / "coverage_power.csv",
            ),
        ),
        (
            "coverage over element count",
            RunConfig(
                sweep=Sweep(variable=SweepVariable.N, values=[float(n) for n in range(1, 11)]),
                trials=_TRIALS,
                output_path=output_dir_path / "coverage_elements.csv",
            ),
        ),
        (
            "coverage over reflection efficiency at 10 elements",
            RunConfig(
                params=SystemParams(n=10),
                sweep=Sweep(variable=SweepVariable.BETA, values=[0.2, 0.4, 0.6, 0.8, 1.0]),
                trials=_TRIALS,
                output_path=output_dir_path / "coverage_beta.csv",
            ),
        ),
        (
            "coverage over interferer RIS share",
            RunConfig(
                sweep=Sweep(variable=SweepVariable.RHO_I, values=[0.0, 0.25, 0.5, 0.75, 1.0]),
                trials=_TRIALS,
                output_path=output_dir_path / "coverage_rho.csv",
            ),
        ),
    ]

    for title, config in runs:
        begin = time.perf_counter()
        if config.output_path.name.startswith("channel_cdf"):
            cmd_channel_cdf(config)
        else:
            cmd_coverage_sweep(config)
        cost_ms = int((time.perf_counter() - begin) * 1000)
        print(f"{title} -> {config.output_path} ({_format_duration(cost_ms)})")


def _format_duration(ms: int) -> str:
    if ms < 1000:
        return f"{ms}ms"
    elif ms < 60000:
        seconds = ms / 1000
        return f"{seconds:.2f}s"
    else:
        minutes = ms // 60000
        seconds = (ms % 60000) / 1000
        return f"{minutes}m {seconds:.2f}s"


if __name__ == "__main__":
    main()
