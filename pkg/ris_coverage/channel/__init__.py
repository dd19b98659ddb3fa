from .exact import (
    exact_cdf_power,
    exact_cdf_SK,
    exact_pdf_power,
    exact_pdf_SK,
    tabulate_exact_power,
)
from .gamma_fit import (
    alzer_cdf_bound,
    alzer_eta,
    fit_gamma,
    gamma_cdf,
    gamma_pdf,
    rayleigh_moment,
    rayleigh_sum_moment,
)
from .sampling import (
    RAYLEIGH_SCALE,
    sample_gamma,
    sample_rayleigh,
    sample_smallscale_approx,
    sample_smallscale_exact,
)
from .types import (
    DistributionTable,
    FitMode,
    GammaFit,
    RisChannelSpec,
    decode_table_csv,
    encode_table_csv,
)
