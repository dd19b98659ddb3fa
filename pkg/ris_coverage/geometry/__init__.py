from .params import SystemParams, dbm_to_watts, default_window_radius
from .ppp import (
    nearest_distance_cdf,
    nearest_distance_pdf,
    sample_connected_block,
    sample_connected_network,
    sample_hppp_distances,
    sample_network,
    sample_network_for_trial,
    sample_typical_block,
)
from .streams import StreamTag, trial_stream
from .types import NetworkBlock, NetworkRealization
