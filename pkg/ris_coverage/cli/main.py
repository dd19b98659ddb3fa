import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from pydantic import ValidationError

from ..channel import FitMode
from ..error import ConfigError
from ..mcsim import FadingMode
from .commands import cmd_channel_cdf, cmd_coverage_sweep, cmd_validate
from .logs import setup_logging
from .run_config import RunConfig, Sweep, SweepVariable, load_run_config, to_config_error

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_CONFIG_ERROR = 2

_DEFAULT_SWEEPS: dict[str, Sweep] = {
    "channel-cdf": Sweep(variable=SweepVariable.N, values=[1.0, 2.0, 5.0, 10.0]),
    "coverage-sweep": Sweep(variable=SweepVariable.P_T_DBM, values=[0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0]),
    "validate": Sweep(variable=SweepVariable.P_T_DBM, values=[0.0, 10.0, 20.0, 30.0]),
}
_DEFAULT_OUTPUTS: dict[str, Path] = {
    "channel-cdf": Path("channel_cdf.csv"),
    "coverage-sweep": Path("coverage.csv"),
    "validate": Path("acceptance_report.txt"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ris-coverage",
        description="Coverage of RIS-aided multi-cell NOMA networks: analysis and Monte Carlo.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("channel-cdf", "tabulate the RIS channel power CDF: empirical, Gamma fit and exact"),
        ("coverage-sweep", "analytic and simulated coverage of both users over a sweep"),
        ("validate", "run the acceptance suite and write a report"),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--config", type=Path, default=None, help="flat TOML run configuration")
        sub.add_argument("--out", type=Path, default=None, help="output file")
        sub.add_argument("--trials", type=int, default=None)
        sub.add_argument("--seed", type=int, default=None)
        sub.add_argument("--fit-mode", choices=[mode.value for mode in FitMode], default=None)
        sub.add_argument("--fading-mode", choices=[mode.value for mode in FadingMode], default=None)
        sub.add_argument("--workers", type=int, default=None, help="Monte Carlo worker threads")
        sub.add_argument("--log-dir", type=Path, default=None, help="also write a log file per run here")
        sub.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    if args.config is not None:
        config = load_run_config(args.config)
    else:
        config = RunConfig(sweep=_DEFAULT_SWEEPS[args.command], output_path=_DEFAULT_OUTPUTS[args.command])

    overrides: dict[str, Any] = {}
    if args.out is not None:
        overrides["output_path"] = args.out
    if args.trials is not None:
        overrides["trials"] = args.trials
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.fit_mode is not None:
        overrides["fit_mode"] = args.fit_mode
    if args.fading_mode is not None:
        overrides["fading_mode"] = args.fading_mode
    if not overrides:
        return config
    try:
        return RunConfig.model_validate({**config.model_dump(), **overrides})
    except ValidationError as error:
        raise to_config_error(error) from error


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    log_file = setup_logging(getattr(logging, args.log_level), args.log_dir)
    if log_file is not None:
        logger.info("Logging to %s", log_file)

    try:
        config = resolve_config(args)
        if args.command == "channel-cdf":
            cmd_channel_cdf(config)
            return EXIT_OK
        if args.command == "coverage-sweep":
            cmd_coverage_sweep(config, workers=args.workers)
            return EXIT_OK
        if cmd_validate(config, workers=args.workers) != 0:
            return EXIT_VALIDATION_FAILED
        return EXIT_OK

    except ConfigError as error:
        logger.error("Configuration error: %s", error)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
