from .coverage import (
    bound_fit,
    connected_coverage_terms,
    coverage_connected,
    coverage_typical_alpha2,
    coverage_typical_alpha4,
    coverage_typical_general,
    i1_alpha2,
    i1_alpha4,
    i1_quadrature,
    typical_coverage_terms,
    upsilon,
    xi1_from_laplace,
    xi1_closed_form,
)
from .laplace import interference_scales, laplace_connected, laplace_typical, pgfl_excess
from .pgfl import laplace_connected_pgfl, laplace_typical_pgfl, laplace_typical_shared_pgfl
from .types import ConnectedCoverageTerms, QuadratureConfig, TypicalCoverageTerms
