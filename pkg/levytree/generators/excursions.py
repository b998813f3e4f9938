"""Normalized excursions: Brownian, stable-tree approximations and rescaling."""

import logging
import math

import numpy as np
from beartype import beartype

from levytree.errors import DomainError
from levytree.generators.models import LevyModel
from levytree.generators.offspring import (
    OffspringDistribution,
    offspring_geometric,
    offspring_stable,
)
from levytree.generators.trees import contour_of_tree, gw_tree_conditioned
from levytree.paths import ContourExcursion
from levytree.rng import replica_stream
from levytree.types import ConditioningMethod

logger: logging.Logger = logging.getLogger("levytree")


@beartype
def brownian_excursion(n: int, rng: np.random.Generator) -> ContourExcursion:
    """Return a normalized Brownian excursion on [0, 1] sampled at n + 1 points.

    A Brownian bridge b(t) = w(t) - t·w(1) is rotated at its first grid
    argmin (Vervaat), so both endpoints are exactly 0.
    """
    if n < 2:
        msg = f"A Brownian excursion needs a grid of at least 2 steps, got {n}."
        raise DomainError(msg)
    increments = rng.normal(0.0, math.sqrt(1.0 / n), size=n)
    w = np.concatenate([[0.0], np.cumsum(increments)])
    t = np.arange(n + 1, dtype=np.float64) / n
    bridge = w - t * w[-1]
    bridge[-1] = 0.0
    k = int(np.argmin(bridge))
    excursion = np.concatenate([bridge[k:n], bridge[: k + 1]]) - bridge[k]
    return ContourExcursion(excursion, 1.0 / n)


@beartype
def rescale_stable(h: ContourExcursion, a: float, model: LevyModel) -> ContourExcursion:
    """Map an excursion of duration σ to duration a·σ under stable scaling.

    Heights are multiplied by a^(1 - 1/γ).
    """
    if not a > 0:
        msg = f"The duration factor must be positive, got {a}."
        raise DomainError(msg)
    if a == 1:
        return h
    factor = a ** (1.0 - 1.0 / model.gamma)
    return ContourExcursion(h.samples * factor, h.step * a)


def offspring_for(model: LevyModel) -> OffspringDistribution:
    """Geometric offspring for γ = 2, the stable law otherwise."""
    if model.is_brownian:
        return offspring_geometric()
    return offspring_stable(model.gamma)


@beartype
def normalized_stable_excursion(
    n: int,
    model: LevyModel,
    rng: np.random.Generator,
    offspring: OffspringDistribution | None = None,
    method: ConditioningMethod = "auto",
    constant: float | None = None,
) -> ContourExcursion:
    """Return the contour of a conditioned GW tree with ``n`` edges, normalized.

    Time is rescaled to [0, 1]; heights are multiplied by
    n^-(1 - 1/γ) times the model's height constant (or ``constant``).
    """
    offspring = offspring if offspring is not None else offspring_for(model)
    tree = gw_tree_conditioned(offspring, n, rng, method=method)
    factor = model.height_constant() if constant is None else constant
    heights = contour_of_tree(tree).samples * (factor * n ** -(1.0 - 1.0 / model.gamma))
    return ContourExcursion(heights, 1.0 / (2 * n))


@beartype
def model_excursion(
    model: LevyModel,
    grid: int,
    rng: np.random.Generator,
) -> ContourExcursion:
    """Sample the normalized excursion of ``model``.

    For γ = 2 this is the Brownian excursion scaled to ψ(u) = c·u², for which
    H is √(2/c) times a normalized Brownian excursion. For γ < 2 it is the
    contour approximation with ``grid`` edges.
    """
    if model.is_brownian:
        h = brownian_excursion(grid, rng)
        return ContourExcursion(h.samples * math.sqrt(2.0 / model.c), h.step)
    return normalized_stable_excursion(grid, model, rng)


@beartype
def calibrate_height_constant(
    model: LevyModel,
    n: int,
    replicas: int,
    seed: int,
) -> float:
    """Estimate the constant matching GW contour heights to Brownian excursions.

    Returns the ratio of the median supremum of ``brownian_excursion`` to the
    median supremum of contours scaled by n^-(1/2) only. Defined for γ = 2.
    """
    if not model.is_brownian:
        msg = "Height calibration against Brownian excursions needs gamma = 2."
        raise DomainError(msg)
    offspring = offspring_geometric()
    brownian_sups = np.empty(replicas)
    contour_sups = np.empty(replicas)
    for index in range(replicas):
        rng = replica_stream(seed, index)
        brownian_sups[index] = brownian_excursion(2 * n, rng).samples.max()
        tree = gw_tree_conditioned(offspring, n, rng)
        contour_sups[index] = contour_of_tree(tree).samples.max() / math.sqrt(n)
    constant = float(np.median(brownian_sups) / np.median(contour_sups))
    logger.info(
        "Calibrated height constant %.6f from %d replicas at n=%d",
        constant,
        replicas,
        n,
    )
    return constant
