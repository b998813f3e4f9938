"""Tree-indexed Brownian motion on a coded tree and the ISE right mass."""

import csv
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from beartype import beartype

from levytree.coding import SpannedTree, distance_matrix, mass_sample, spanned_subtree
from levytree.errors import DomainError
from levytree.paths import ContourExcursion
from levytree.types import FloatArray, Time

logger: logging.Logger = logging.getLogger("levytree")

RIGHT_MASS_HEADER = ("tree_id", "k", "right_mass")


@beartype
@dataclass(frozen=True, eq=False)
class LabeledDisplacement:
    """Gaussian displacements Z at the vertices visited at ``times``.

    Attributes:
        times: The sampled times; entry i carries label i + 1.
        values: Z at each sampled vertex. The root has Z = 0.
        tree: The spanned tree the displacements live on.

    """

    times: tuple[Time, ...]
    values: FloatArray
    tree: SpannedTree

    @property
    def root_value(self) -> float:
        """Z at the root, always 0."""
        return 0.0


def _vertex_values(
    tree: SpannedTree,
    rng: np.random.Generator,
    replicas: int,
) -> FloatArray:
    """Return Z at every vertex, one row per replica.

    Each edge carries an independent centered Gaussian increment with
    variance equal to its length.
    """
    values = np.zeros((replicas, tree.size), dtype=np.float64)
    lengths = np.zeros(tree.size, dtype=np.float64)
    for _, child, length in tree.edges():
        lengths[child] = length
    increments = rng.standard_normal((replicas, tree.size)) * np.sqrt(lengths)
    for vertex in tree.preorder():
        parent = tree.parents[vertex]
        if parent >= 0:
            values[:, vertex] = values[:, parent] + increments[:, vertex]
    return values


def _label_vertices(tree: SpannedTree, count: int) -> list[int]:
    owner = {label: vertex for vertex, carried in enumerate(tree.labels) for label in carried}
    return [owner[label] for label in range(1, count + 1)]


@beartype
def sample_snake(
    h: ContourExcursion,
    times: list[Time],
    rng: np.random.Generator,
) -> LabeledDisplacement:
    """Sample Z at the vertices visited at ``times``.

    Z is summed along root paths of the spanned subtree from independent
    increments, one per edge.
    """
    tree = spanned_subtree(h, times)
    values = _vertex_values(tree, rng, 1)[0]
    return LabeledDisplacement(
        times=tuple(times),
        values=values[_label_vertices(tree, len(times))],
        tree=tree,
    )


@beartype
def ise_right_mass(
    h: ContourExcursion,
    k: int,
    rng: np.random.Generator,
    flip: bool = False,
) -> float:
    """Estimate the ISE mass of (0, ∞) from ``k`` mass-sampled vertices.

    Returns the fraction of sampled vertices with Z > 0, or with -Z > 0 when
    ``flip`` is set.
    """
    if k < 1:
        msg = f"Need at least one vertex sample, got k={k}."
        raise DomainError(msg)
    snake = sample_snake(h, mass_sample(h, rng, k), rng)
    signs = -snake.values if flip else snake.values
    return float(np.count_nonzero(signs > 0)) / k


@beartype
@dataclass(frozen=True, eq=False)
class CovarianceCheck:
    """Empirical E[(Z_a - Z_b)²] against d_H(a, b).

    Attributes:
        expected: The matrix of d_H values.
        observed: The empirical mean squared differences.
        standard_errors: Standard errors of the empirical means.

    """

    expected: FloatArray
    observed: FloatArray
    standard_errors: FloatArray

    def within(self, sigmas: float = 4.0) -> bool:
        """Whether every entry lies within ``sigmas`` standard errors."""
        slack = sigmas * self.standard_errors + 1e-12
        return bool(np.all(np.abs(self.observed - self.expected) <= slack))


@beartype
def covariance_check(
    h: ContourExcursion,
    times: list[Time],
    replicas: int,
    rng: np.random.Generator,
) -> CovarianceCheck:
    """Compare E[(Z_a - Z_b)²] over ``replicas`` draws with d_H(a, b)."""
    tree = spanned_subtree(h, times)
    values = _vertex_values(tree, rng, replicas)[:, _label_vertices(tree, len(times))]
    differences = (values[:, :, None] - values[:, None, :]) ** 2
    return CovarianceCheck(
        expected=distance_matrix(h, times).values,
        observed=differences.mean(axis=0),
        standard_errors=differences.std(axis=0, ddof=1) / np.sqrt(replicas),
    )


@beartype
def write_right_mass_rows(
    rows: Iterable[tuple[int, int, float]],
    destination: Path,
) -> None:
    """Append ``tree_id,k,right_mass`` rows, writing the header to a new file."""
    fresh = not destination.exists() or destination.stat().st_size == 0
    with destination.open("a", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        if fresh:
            writer.writerow(RIGHT_MASS_HEADER)
        writer.writerows((tree_id, k, repr(mass)) for tree_id, k, mass in rows)
