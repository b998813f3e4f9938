"""Distances, equivalence of times and the triplet functional of a coded tree."""

from dataclasses import dataclass
from itertools import combinations

import numpy as np
from beartype import beartype

from levytree.paths import (
    ContourExcursion,
    FinitePath,
    SparseTable,
    eval_path,
    range_min,
    reroot,
    shift_time,
    tree_distance,
)
from levytree.types import FloatArray, Time

DISTANCE_TOLERANCE = 1e-12


def _tolerance(h: FinitePath) -> float:
    return 0.0 if h.is_integer else DISTANCE_TOLERANCE


@beartype
@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Matrix of d_H values over a list of times.

    Attributes:
        times: The times the rows and columns refer to.
        values: Symmetric, nonnegative, zero on the diagonal.

    """

    times: tuple[Time, ...]
    values: FloatArray

    def is_symmetric(self) -> bool:
        """Whether the matrix equals its transpose."""
        return bool(np.array_equal(self.values, self.values.T))

    def satisfies_four_point(self, atol: float = DISTANCE_TOLERANCE) -> bool:
        """Check the four-point condition on every quadruple.

        For a tree metric, of the three sums d(x,y) + d(z,w), d(x,z) + d(y,w),
        d(x,w) + d(y,z) the two largest are equal.
        """
        d = self.values
        for x, y, z, w in combinations(range(len(self.times)), 4):
            sums = sorted((d[x, y] + d[z, w], d[x, z] + d[y, w], d[x, w] + d[y, z]))
            if sums[2] - sums[1] > atol:
                return False
        return True

    def close_to(self, other: "DistanceMatrix", atol: float = DISTANCE_TOLERANCE) -> bool:
        """Entrywise comparison within ``atol``."""
        if self.values.shape != other.values.shape:
            return False
        return bool(np.allclose(self.values, other.values, rtol=0.0, atol=atol))


@beartype
def equivalent(h: ContourExcursion, s: Time, t: Time) -> bool:
    """Whether s ~_H t, that is H(s) = H(t) = min of H between them."""
    return tree_distance(h, s, t) <= _tolerance(h)


@beartype
def distance_matrix(
    h: ContourExcursion,
    times: list[Time],
    table: SparseTable | None = None,
) -> DistanceMatrix:
    """Return the matrix of d_H(times[i], times[j])."""
    for t in times:
        h.check_time(t)
    table = table if table is not None else SparseTable(h.samples)
    size = len(times)
    values = np.zeros((size, size), dtype=np.float64)
    for i, j in combinations(range(size), 2):
        values[i, j] = values[j, i] = tree_distance(h, times[i], times[j], table)
    return DistanceMatrix(times=tuple(times), values=values)


@beartype
def triplet(
    h: ContourExcursion,
    u: Time,
    v: Time,
) -> tuple[int | float, int | float, int | float]:
    """Return (H_u - m, H_v - m, m) where m is the minimum of H between u and v."""
    m = range_min(h, min(u, v), max(u, v))
    return eval_path(h, u) - m, eval_path(h, v) - m, m


@beartype
def isometry_check(
    h: ContourExcursion,
    s: Time,
    times: list[Time],
    atol: float = DISTANCE_TOLERANCE,
) -> bool:
    """Check that d_{H^[s]}(t, t') = d_H(s ⊕ t, s ⊕ t') for all given times."""
    rerooted = reroot(h, s)
    shifted: list[Time] = [shift_time(h.duration, s, t) for t in times]
    return distance_matrix(rerooted, times).close_to(
        distance_matrix(h, shifted),
        atol=atol,
    )
