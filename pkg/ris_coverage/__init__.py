from .analytic import (
    bound_fit,
    coverage_connected,
    coverage_typical_alpha2,
    coverage_typical_alpha4,
    coverage_typical_general,
    laplace_connected,
    laplace_typical,
)
from .channel import (
    FitMode,
    GammaFit,
    RisChannelSpec,
    exact_cdf_power,
    exact_pdf_power,
    fit_gamma,
    sample_smallscale_approx,
    sample_smallscale_exact,
)
from .cli import RunConfig, cmd_channel_cdf, cmd_coverage_sweep, cmd_validate, load_run_config
from .error import (
    AcceptanceError,
    ConfigError,
    ConvergenceError,
    DomainError,
    InfeasibleThresholdError,
)
from .geometry import SystemParams
from .mcsim import (
    CoverageEstimate,
    FadingMode,
    OwnChannel,
    estimate_coverage_connected,
    estimate_coverage_typical,
)
from .specfn import InverseLaplaceConfig, InverseLaplaceMethod
