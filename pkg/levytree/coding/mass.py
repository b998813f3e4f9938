"""Sampling vertices from the mass measure of a coded tree."""

import numpy as np
from beartype import beartype

from levytree.errors import DomainError
from levytree.paths import ContourExcursion, reroot
from levytree.types import IntArray, Time


@beartype
def mass_sample_indices(
    h: ContourExcursion,
    rng: np.random.Generator,
    p: int,
) -> IntArray:
    """Return ``p`` grid indices of independent uniform times on [0, σ].

    Uniform draws are snapped to the nearest grid point.
    """
    if p < 1:
        msg = f"Need at least one sample, got p={p}."
        raise DomainError(msg)
    draws = rng.uniform(0.0, 1.0, size=p) * h.size
    return np.rint(draws).astype(np.int64)


@beartype
def mass_sample(h: ContourExcursion, rng: np.random.Generator, p: int) -> list[Time]:
    """Return ``p`` independent mass-measure vertices as grid times."""
    return [index * h.step for index in mass_sample_indices(h, rng, p).tolist()]


@beartype
def uniform_reroot(h: ContourExcursion, rng: np.random.Generator) -> ContourExcursion:
    """Re-root ``h`` at a vertex drawn from the mass measure."""
    return reroot(h, mass_sample(h, rng, 1)[0])
