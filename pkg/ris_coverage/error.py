from typing import Sequence


class DomainError(ValueError):
    def __init__(self, function: str, message: str, argument: float | None = None) -> None:
        super().__init__(f"{function}: {message}")
        self.function: str = function
        self.argument: float | None = argument


class ConvergenceError(ArithmeticError):
    """A series, quadrature or inverse transform missed its accuracy target."""

    def __init__(
        self,
        function: str,
        estimates: Sequence[float],
        tolerance: float,
    ) -> None:
        super().__init__(
            f"{function} did not converge to {tolerance:g}: estimates {list(estimates)}"
        )
        self.function: str = function
        self.estimates: list[float] = list(estimates)
        self.tolerance: float = tolerance


class ConfigError(ValueError):
    def __init__(self, message: str, field: str | None = None) -> None:
        super().__init__(message)
        self.field: str | None = field


class InfeasibleThresholdError(ConfigError):
    """The threshold reaches the a_c/a_t ceiling, so the event can never occur."""

    def __init__(self, threshold_name: str, threshold: float, limit: float) -> None:
        super().__init__(
            f"{threshold_name}={threshold:g} is not below the feasibility limit a_c/a_t={limit:g}",
            field=threshold_name,
        )
        self.threshold_name: str = threshold_name
        self.threshold: float = threshold
        self.limit: float = limit


class AcceptanceError(Exception):
    def __init__(self, failed_checks: Sequence[str]) -> None:
        super().__init__(f"{len(failed_checks)} acceptance check(s) failed: {', '.join(failed_checks)}")
        self.failed_checks: list[str] = list(failed_checks)


def is_numeric_error(error: Exception) -> bool:
    return isinstance(error, (DomainError, ConvergenceError))
