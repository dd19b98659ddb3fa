from .functions import (
    erfc,
    erfcx,
    lower_incomplete_gamma,
    mp_precision,
    parabolic_d_minus2,
    tricomi_psi_1_half,
)
from .hypergeometric import gauss2f1
from .laplace import (
    InverseLaplaceConfig,
    InverseLaplaceMethod,
    Transform,
    inverse_laplace,
    laplace_of_SK,
)
