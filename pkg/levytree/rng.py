"""Seeded counter-based random streams.

Every random draw in levytree comes from a ``numpy.random.Generator`` backed
by the counter-based ``Philox`` bit generator. The stream of replica ``i`` is
keyed by ``(seed, i)`` (and by a retry attempt number when a replica has to be
rerun), so results never depend on how replicas are distributed over workers.
"""

import numpy as np
from beartype import beartype


@beartype
def stream(seed: int, *key: int) -> np.random.Generator:
    """Return the generator of substream ``key`` of ``seed``."""
    if seed < 0 or any(k < 0 for k in key):
        msg = f"Seeds and substream keys must be nonnegative, got {seed}, {key}."
        raise ValueError(msg)
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=key)
    return np.random.Generator(np.random.Philox(sequence))


@beartype
def replica_stream(seed: int, index: int, attempt: int = 0) -> np.random.Generator:
    """Return the generator of replica ``index``, retry ``attempt``."""
    if attempt == 0:
        return stream(seed, index)
    return stream(seed, index, attempt)
