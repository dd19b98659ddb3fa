import math

# network defaults
DEFAULT_LAMBDA_B = 1.0 / (300.0**2 * math.pi)
DEFAULT_P_T_DBM = 20.0
DEFAULT_NOISE_DBM = -90.0
DEFAULT_ALPHA = 4.0
DEFAULT_A_C = 0.6
DEFAULT_A_T = 0.4
DEFAULT_THRESHOLD = 1e-2
DEFAULT_N = 5
DEFAULT_BETA = 1.0
DEFAULT_RHO_I = 0.5
DEFAULT_R_C = 50.0
DEFAULT_RU_GAIN = 1.0
DEFAULT_INTERCEPT = 1.0

# window radius in units of the mean nearest-BS scale 1/sqrt(pi*lambda)
WINDOW_SCALES = 10.0

# inverse Laplace
DEFAULT_INVERSE_LAPLACE_ORDER = 32
DEFAULT_INVERSE_LAPLACE_TOL = 1e-5
FALLBACK_INVERSE_LAPLACE_ORDER = 48
EXACT_LAW_MAX_K = 8

# quadrature of the distance integral of the typical-user bound
I1_TAIL_RATIO = 1e-12
I1_EPSREL = 1e-12

# Monte Carlo
MC_BLOCK_TRIALS = 10_000
MIN_VALIDATE_TRIALS = 10_000
CI_Z = 1.96

# channel CDF table
CDF_GRID_POINTS = 121
CDF_GRID_QUANTILE = 0.999

# acceptance tolerances
KS_PAPER_FIT_TOL = 0.05
KS_MOMENT_FIT_TOL = 0.01
RAYLEIGH_PDF_TOL = 1e-5
CONVOLUTION_PDF_TOL = 1e-4
LAPLACE_REL_TOL = 1e-6
SPECIALIZATION_REL_TOL = 1e-9
CONNECTED_ABS_TOL = 0.02
