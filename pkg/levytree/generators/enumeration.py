"""Exhaustive enumeration of Dyck paths and exact Galton-Watson weights."""

import math
from collections.abc import Iterator
from fractions import Fraction

import numpy as np
from beartype import beartype

from levytree.errors import DomainError, ResourceError
from levytree.generators.trees import PlaneTree, tree_of_contour
from levytree.paths import LatticePath

MAX_DYCK_HALF_LENGTH = 12


@beartype
def catalan(n: int) -> int:
    """Return the Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        msg = f"Catalan numbers are defined for n >= 0, got {n}."
        raise DomainError(msg)
    return math.comb(2 * n, n) // (n + 1)


@beartype
def enumerate_dyck(n: int) -> Iterator[LatticePath]:
    """Yield every Dyck path of length 2n once, in lexicographic order with up-steps first.

    Raises:
        DomainError: ``n`` < 1.
        ResourceError: ``n`` > 12.

    """
    if n < 1:
        msg = f"Dyck enumeration needs n >= 1, got {n}."
        raise DomainError(msg)
    if n > MAX_DYCK_HALF_LENGTH:
        msg = f"Dyck enumeration is limited to n <= {MAX_DYCK_HALF_LENGTH}, got {n}."
        raise ResourceError(msg)
    heights = [0] * (2 * n + 1)

    def extend(position: int, ups: int) -> Iterator[LatticePath]:
        if position == 2 * n:
            yield LatticePath(np.array(heights, dtype=np.int64))
            return
        current = heights[position]
        downs = position - ups
        if ups < n:
            heights[position + 1] = current + 1
            yield from extend(position + 1, ups + 1)
        if downs < ups:
            heights[position + 1] = current - 1
            yield from extend(position + 1, ups)

    yield from extend(0, 0)


@beartype
def enumerate_plane_trees(n: int) -> Iterator[PlaneTree]:
    """Yield every plane tree with ``n`` edges, in the order of their contours."""
    for dyck in enumerate_dyck(n):
        yield tree_of_contour(dyck)


@beartype
def srw_excursion_tree_weight(n: int) -> Fraction:
    """Return the GW(geometric 1/2) probability 2^-(2n + 1) of a plane tree with n edges."""
    if n < 0:
        msg = f"Edge counts are nonnegative, got {n}."
        raise DomainError(msg)
    return Fraction(1, 2 ** (2 * n + 1))
