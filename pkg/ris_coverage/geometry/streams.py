from enum import IntEnum

import numpy as np


class StreamTag(IntEnum):
    NETWORK = 0
    TYPICAL = 1
    CONNECTED = 2
    CHANNEL = 3


def trial_stream(seed: int, tag: StreamTag | int, index: int) -> np.random.Generator:
    """Independent generator for work unit ``index`` of stream ``tag``.

    Depends only on (seed, tag, index), so units can be drawn in any order
    and on any thread.
    """
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(int(tag), index))
    return np.random.Generator(np.random.PCG64(sequence))
