"""Spine paths H^μ and their law Q_μ, on lattice walks."""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

import numpy as np
from beartype import beartype

from levytree.errors import DomainError
from levytree.generators import WalkPath, height_of_walk, walk_until_hit
from levytree.paths import FinitePath
from levytree.spine.measures import FiniteMeasure
from levytree.types import IntArray, SampleArray, SpineScheme

ENDPOINT_TOLERANCE = 1e-12
LATTICE_SLACK = 1e-6


def _spine_samples(
    baselines: list[Real],
    delta: Real,
    levels: IntArray,
    heights: IntArray,
) -> SampleArray:
    """Return baselines[levels] + δ·heights, exact while everything is rational."""
    scale = _common_denominator([delta, *baselines])
    if scale is None:
        table = np.array([float(b) for b in baselines], dtype=np.float64)
        return table[levels] + float(delta) * heights
    table = np.array([int(b * scale) for b in baselines], dtype=np.int64)
    scaled = table[levels] + int(delta * scale) * heights
    return scaled if scale == 1 else scaled / scale


def _time_step(delta: Real) -> float | int:
    # a ±δ walk is run at time step δ²
    if isinstance(delta, int):
        return delta * delta
    return float(delta) ** 2


@beartype
@dataclass(frozen=True, eq=False)
class SpinePath:
    """The path H^μ built from a walk stopped at T_{|μ|}.

    Attributes:
        path: H^μ on its grid; starts at S(μ) and ends at 0.
        measure: μ.
        walk: The source walk, stopped when it first hits -|μ|.
        scheme: How the walk's excursions are placed along the spine.

    """

    path: FinitePath
    measure: FiniteMeasure
    walk: WalkPath
    scheme: SpineScheme

    def __post_init__(self) -> None:
        """Check the endpoint values."""
        first, last = self.path.samples[0], self.path.samples[-1]
        if abs(first - float(self.measure.support_max)) > ENDPOINT_TOLERANCE or last != 0:
            msg = "A spine path starts at S(μ) and ends at 0."
            raise DomainError(msg)

    @property
    def duration(self) -> float | int:
        """ζ of the spine path."""
        return self.path.lifetime


def _levels(mu: FiniteMeasure, delta: Real, units: int, offset: Real) -> list[Real]:
    """S(k_{(j + offset)δ} μ) for j = 0..units."""
    total = mu.total_mass
    return [
        mu.truncate(min(total, (j + offset) * delta)).support_max
        for j in range(units + 1)
    ]


@beartype
def spine_path(
    mu: FiniteMeasure,
    walk: WalkPath,
    scheme: SpineScheme = "records",
) -> SpinePath:
    """Return H^μ_t = S(k_{-I_t} μ) + H_t over [0, T_{|μ|}].

    ``records`` takes H from :func:`height_of_walk` and the local time -I_t of
    the walk, scaled by the walk's unit δ. ``symmetric`` uses H = X - I, places
    the excursions at level j above the minimum at S(k_{(j + 1/2)δ} μ), and
    frames the path by a leading point S(μ) and a terminal 0. Both start at
    S(μ) and end at 0.

    Raises:
        InputError: |μ| is not a multiple of δ or the walk never reaches -|μ|.

    """
    delta = walk.delta
    units = mu.mass_units(delta)
    walk = walk.truncated_at_hit(units)
    local = -walk.running_min
    step = _time_step(delta)
    if scheme == "records":
        baselines = _levels(mu, delta, units, 0)
        heights = height_of_walk(walk).samples
        samples = _spine_samples(baselines, delta, local, heights)
    else:
        # two extra baselines frame the path: S(μ) first and 0 last
        baselines = [*_levels(mu, delta, units, Fraction(1, 2)), mu.support_max, 0]
        levels = np.concatenate([[units + 1], local[:-1], [units + 2]])
        above = np.concatenate([[0], (walk.values + local)[:-1], [0]])
        samples = _spine_samples(baselines, delta, levels, above)
    return SpinePath(
        path=FinitePath(samples, step),
        measure=mu,
        walk=walk,
        scheme=scheme,
    )


@beartype
def sample_Q(  # noqa: N802
    mu: FiniteMeasure,
    rng: np.random.Generator,
    delta: int | float | Fraction = 1,
    budget: int = 10**7,
    scheme: SpineScheme = "symmetric",
) -> SpinePath:
    """Sample H^μ from a fair ±δ walk run until it hits -|μ|.

    Raises:
        InputError: |μ| is not a multiple of δ.
        StepBudgetExceeded: The walk did not hit -|μ| within ``budget`` steps.

    """
    units = mu.mass_units(delta)
    walk = walk_until_hit(units, rng, delta, budget)
    return spine_path(mu, walk, scheme)


@beartype
def key2_identities_hold(mu: FiniteMeasure, walk: WalkPath) -> bool:
    """Check the pathwise spine identities on a lattice instance.

    For every t up to T_{|μ|}:
    min over [0, t] of H^μ equals S(k_{-I_t} μ), and
    S(μ) + H_t - S(k_{|μ| + I_t} μ) equals H_t + S(k_{-I_t} μ̄).
    Comparisons are exact when μ and δ are exact.
    """
    spine = spine_path(mu, walk, "records")
    delta = walk.delta
    units = mu.mass_units(delta)
    total = mu.total_mass
    mirrored = mu.reversed()
    heights = height_of_walk(spine.walk).samples.tolist()
    local = (-spine.walk.running_min).tolist()
    top = [mu.truncate(min(total, j * delta)).support_max for j in range(units + 1)]
    kept = [mu.truncate(total - j * delta).support_max for j in range(units + 1)]
    top_mirrored = [
        mirrored.truncate(min(total, j * delta)).support_max for j in range(units + 1)
    ]
    support = mu.support_max
    scale = _common_denominator([delta, support, *top, *kept, *top_mirrored])
    if scale is not None:
        # integers compare faster than fractions
        delta, support, top, kept, top_mirrored = (
            int(delta * scale),
            int(support * scale),
            [int(v * scale) for v in top],
            [int(v * scale) for v in kept],
            [int(v * scale) for v in top_mirrored],
        )
    values = _path_values(spine.path.samples, scale)
    if values is None:
        return False
    exact = scale is not None
    running: Real | None = None
    for j, h, value in zip(local, heights, values, strict=True):
        height = delta * h
        if not _agree(value, top[j] + height, exact):
            return False
        running = value if running is None else min(running, value)
        if not _agree(running, top[j], exact):
            return False
        if not _agree(support + height - kept[j], height + top_mirrored[j], exact):
            return False
    return True


def _agree(a: Real, b: Real, exact: bool) -> bool:
    if exact:
        return a == b
    return math.isclose(a, b, rel_tol=0.0, abs_tol=ENDPOINT_TOLERANCE)


def _path_values(samples: SampleArray, scale: int | None) -> list[Real] | None:
    """Samples of a spine path in units of 1/scale, None when they are off that lattice."""
    if scale is None:
        return samples.tolist()
    scaled = samples * scale
    rounded = np.rint(scaled)
    if not np.allclose(scaled, rounded, rtol=0.0, atol=LATTICE_SLACK):
        return None
    return rounded.astype(np.int64).tolist()


def _common_denominator(values: list[Real]) -> int | None:
    """Least common denominator of rational values, None if one is a float."""
    if not all(isinstance(v, int | Fraction) for v in values):
        return None
    return math.lcm(*(Fraction(v).denominator for v in values))
