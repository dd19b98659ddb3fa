from .estimator import (
    estimate_coverage_connected,
    estimate_coverage_typical,
    simulate_connected_block,
    simulate_typical_block,
)
from .interference import (
    interference_connected_block,
    interference_typical,
    interference_typical_block,
    ris_interferer_gain,
)
from .sinr import sinr_connected, sinr_sic, sinr_typical_post_sic
from .types import CoverageEstimate, FadingMode, OwnChannel
