"""Exact verification suites: exhaustive enumeration and seeded pathwise checks."""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

import numpy as np
from beartype import beartype

from levytree.coding import distance_matrix
from levytree.config import McConfig
from levytree.errors import ResourceError
from levytree.generators import (
    brownian_excursion,
    catalan,
    enumerate_dyck,
    srw_excursion_tree_weight,
    walk_until_hit,
)
from levytree.harness.functionals import FunctionalSpec, default_battery
from levytree.harness.replicas import retrying, run_replicas
from levytree.harness.reports import StatRow, TestReport
from levytree.paths import (
    ContourExcursion,
    is_dyck,
    reroot,
    reverse,
    shift_time,
    split_identity_holds,
)
from levytree.spine import Atom, DriftSegment, FiniteMeasure, key2_identities_hold
from levytree.types import ParamValue

logger: logging.Logger = logging.getLogger("levytree")

MAX_BIJECTION_N = 10
MAX_PROP1_N = 7
ISOMETRY_TOLERANCE = 1e-12
ISOMETRY_SHIFTS = 10
ISOMETRY_POINTS = 5
KEY2_WALK_BUDGET = 2_000


def _elapsed_ms(started: float) -> float:
    return (time.perf_counter() - started) * 1000.0


def _excursions(n: int) -> list[ContourExcursion]:
    return [ContourExcursion(path.samples, 1) for path in enumerate_dyck(n)]


def _finish(
    suite: str,
    rows: list[StatRow],
    passed: bool,
    params: dict[str, ParamValue],
    started: float,
    seed: int | None = None,
) -> TestReport:
    report = TestReport(
        suite=suite,
        mode="exact",
        params=params,
        seed=seed,
        stats=rows,
        passed=passed,
        runtime_ms=_elapsed_ms(started),
    )
    logger.info("Suite %s finished: %s", suite, "pass" if passed else "FAIL")
    return report


@beartype
def verify_reroot_bijection(n: int) -> TestReport:
    """Check that re-rooting at each integer s permutes the Dyck paths of length 2n.

    For every Dyck path H and s in [0, 2n]: H^[s] is a Dyck path of length 2n,
    (H^[s])^[2n - s] = H, and the image of the Dyck set has Catalan(n) elements.
    """
    if n > MAX_BIJECTION_N:
        msg = f"The bijection suite is limited to n <= {MAX_BIJECTION_N}, got {n}."
        raise ResourceError(msg)
    started = time.perf_counter()
    logger.info("Suite reroot-bijection started with n=%d", n)
    paths = _excursions(n)
    not_dyck = 0
    not_involutive = 0
    smallest_image = catalan(n)
    for s in range(2 * n + 1):
        image: set[tuple[int, ...]] = set()
        for h in paths:
            rerooted = reroot(h, s)
            if not is_dyck(rerooted) or rerooted.size != 2 * n:
                not_dyck += 1
            if not reroot(rerooted, 2 * n - s).same_as(h):
                not_involutive += 1
            image.add(tuple(rerooted.samples.tolist()))
        smallest_image = min(smallest_image, len(image))
    rows = [
        StatRow(functional="dyck_closure_failures", statistic=not_dyck),
        StatRow(functional="involution_failures", statistic=not_involutive),
        StatRow(functional="smallest_image", statistic=smallest_image),
    ]
    passed = not_dyck == 0 and not_involutive == 0 and smallest_image == catalan(n)
    params: dict[str, ParamValue] = {
        "n": n,
        "paths": len(paths),
        "shifts": 2 * n + 1,
        "checks": len(paths) * (2 * n + 1),
    }
    return _finish("reroot-bijection", rows, passed, params, started)


@beartype
@dataclass(frozen=True)
class DurationWeight:
    """A weight g(σ): 1 everywhere, or the indicator of one duration."""

    duration: int | None = None

    @property
    def name(self) -> str:
        """Name used in report rows."""
        return "1" if self.duration is None else f"1{{sigma={self.duration}}}"

    def __call__(self, sigma: int) -> int:
        """Evaluate g(σ)."""
        return 1 if self.duration is None or sigma == self.duration else 0


@beartype
def verify_prop1_exact(
    n_max: int,
    battery: list[FunctionalSpec] | None = None,
    weights: list[DurationWeight] | None = None,
) -> TestReport:
    """Check the re-rooting identity summed over all plane trees with n <= n_max edges.

    Trees carry their GW(geometric 1/2) weight 2^-(2n + 1). For every battery
    functional φ and weight g, with σ = 2n and s over the integers of [0, σ):

    Σ g(σ) Σ_s F(s, H^[s]) = Σ g(σ) Σ_s F(s, H)

    for F(s, H) = φ(H) and F(s, H) = (s/σ)·φ(H). A third sum walks the mirrored
    trees backwards, Σ g(σ) Σ_{s=1..σ} F(σ - s, (H∘rev)^[σ - s]), and must agree
    because time reversal permutes the Dyck paths of each length. All sums are
    exact rationals.
    """
    if n_max > MAX_PROP1_N:
        msg = f"The exact identity suite is limited to n_max <= {MAX_PROP1_N}, got {n_max}."
        raise ResourceError(msg)
    started = time.perf_counter()
    logger.info("Suite prop1 started with n_max=%d", n_max)
    battery = battery if battery is not None else default_battery()
    weights = weights if weights is not None else [
        DurationWeight(),
        DurationWeight(duration=2 * n_max),
    ]
    variants = ("plain", "s-weighted")
    zero = Fraction(0)
    sums = {
        (spec.name, g.name, variant, side): zero
        for spec in battery
        for g in weights
        for variant in variants
        for side in ("rerooted", "original", "mirrored")
    }
    for n in range(1, n_max + 1):
        sigma = 2 * n
        weight = srw_excursion_tree_weight(n)
        for h in _excursions(n):
            rerooted = [reroot(h, s) for s in range(sigma)]
            mirrored = reverse(h)
            backwards = [(sigma - s, reroot(mirrored, sigma - s)) for s in range(1, sigma + 1)]
            for spec in battery:
                plain = spec.evaluate_exact(h)
                values = [spec.evaluate_exact(r) for r in rerooted]
                mirror_values = [(s, spec.evaluate_exact(r)) for s, r in backwards]
                per_variant = {
                    "plain": (
                        sum(values, zero),
                        sigma * plain,
                        sum((v for _, v in mirror_values), zero),
                    ),
                    "s-weighted": (
                        sum((Fraction(s, sigma) * v for s, v in enumerate(values)), zero),
                        sum((Fraction(s, sigma) * plain for s in range(sigma)), zero),
                        sum((Fraction(s, sigma) * v for s, v in mirror_values), zero),
                    ),
                }
                for g in weights:
                    factor = weight * g(sigma)
                    if not factor:
                        continue
                    for variant, (re, orig, mirror) in per_variant.items():
                        sums[spec.name, g.name, variant, "rerooted"] += factor * re
                        sums[spec.name, g.name, variant, "original"] += factor * orig
                        sums[spec.name, g.name, variant, "mirrored"] += factor * mirror
    rows: list[StatRow] = []
    passed = True
    for spec in battery:
        for g in weights:
            for variant in variants:
                key = (spec.name, g.name, variant)
                lhs = sums[(*key, "rerooted")]
                rhs = sums[(*key, "original")]
                mirror = sums[(*key, "mirrored")]
                passed = passed and lhs == rhs == mirror
                rows.append(
                    StatRow(
                        functional=f"{spec.name} g={g.name} {variant}",
                        statistic=str(lhs - rhs or mirror - lhs),
                    ),
                )
    params: dict[str, ParamValue] = {
        "n_max": n_max,
        "battery": [spec.name for spec in battery],
        "weights": [g.name for g in weights],
    }
    return _finish("prop1", rows, passed, params, started)


@beartype
def verify_time_reversal_exact(n: int) -> TestReport:
    """Check that time reversal is a weight-preserving bijection of the Dyck paths of length 2n."""
    started = time.perf_counter()
    logger.info("Suite time-reversal (exact) started with n=%d", n)
    paths = _excursions(n)
    failures = 0
    image: set[tuple[int, ...]] = set()
    for h in paths:
        mirrored = reverse(h)
        if not is_dyck(mirrored) or not reverse(mirrored).same_as(h):
            failures += 1
        image.add(tuple(mirrored.samples.tolist()))
    rows = [
        StatRow(functional="reversal_failures", statistic=failures),
        StatRow(functional="image_size", statistic=len(image)),
    ]
    passed = failures == 0 and len(image) == catalan(n)
    return _finish("time-reversal", rows, passed, {"n": n, "paths": len(paths)}, started)


@beartype
def verify_split_identity(n: int) -> TestReport:
    """Check that tilde(H^{+,s}) and tilde(H^{-,s}) are the two halves of H^[s], exhaustively."""
    started = time.perf_counter()
    logger.info("Suite split-identity started with n=%d", n)
    paths = _excursions(n)
    failures = sum(
        not split_identity_holds(h, s) for h in paths for s in range(2 * n + 1)
    )
    rows = [StatRow(functional="split_identity_failures", statistic=failures)]
    params: dict[str, ParamValue] = {"n": n, "checks": len(paths) * (2 * n + 1)}
    return _finish("split-identity", rows, failures == 0, params, started)


def _isometry_deviation(grid: int, rng: np.random.Generator) -> float:
    """Largest |d_{H^[s]}(t, t') - d_H(s ⊕ t, s ⊕ t')| over random s, t, t'."""
    h = brownian_excursion(grid, rng)
    # integer grid times keep s ⊕ t exact
    h = ContourExcursion(h.samples, 1)
    worst = 0.0
    for _ in range(ISOMETRY_SHIFTS):
        s = int(rng.integers(0, grid + 1))
        times = [int(t) for t in rng.integers(0, grid + 1, size=ISOMETRY_POINTS)]
        shifted = [shift_time(grid, s, t) for t in times]
        plain = distance_matrix(h, shifted).values
        rerooted = distance_matrix(reroot(h, s), list(times)).values
        worst = max(worst, float(np.abs(plain - rerooted).max()))
    return worst


def _isometry_replica(cfg: McConfig, index: int) -> tuple[float, int]:
    return retrying(partial(_isometry_deviation, cfg.grid), cfg, index)


@beartype
def verify_isometry(cfg: McConfig) -> TestReport:
    """Check d_{H^[s]}(t, t') = d_H(s ⊕ t, s ⊕ t') on random Brownian excursions.

    ``cfg.replicas`` excursions on a grid of ``cfg.grid`` steps, each with 10
    random shifts and 5 random times.
    """
    started = time.perf_counter()
    logger.info("Suite isometry started with %s", cfg.provenance())
    results = run_replicas(partial(_isometry_replica, cfg), cfg.replicas, cfg)
    worst = max(deviation for deviation, _ in results)
    retries = sum(spent for _, spent in results)
    rows = [StatRow(functional="max_deviation", statistic=worst)]
    params: dict[str, ParamValue] = {
        **cfg.provenance(),
        "shifts": ISOMETRY_SHIFTS,
        "points": ISOMETRY_POINTS,
        "tolerance": ISOMETRY_TOLERANCE,
        "retries": retries,
    }
    return _finish(
        "isometry",
        rows,
        worst <= ISOMETRY_TOLERANCE,
        params,
        started,
        seed=cfg.seed,
    )


def random_lattice_measure(rng: np.random.Generator) -> FiniteMeasure:
    """A measure with half-integer drift pieces, integer rates, atoms and integer mass."""
    drift: list[DriftSegment] = []
    boundary = Fraction(0)
    for _ in range(int(rng.integers(1, 3))):
        end = boundary + Fraction(int(rng.integers(1, 5)), 2)
        drift.append(DriftSegment(boundary, end, int(rng.integers(1, 3))))
        boundary = end
    atoms = [
        Atom(
            Fraction(int(rng.integers(0, int(2 * boundary) + 1)), 2),
            int(rng.integers(1, 3)),
        )
        for _ in range(int(rng.integers(0, 3)))
    ]
    measure = FiniteMeasure(drift=tuple(drift), atoms=tuple(atoms))
    if Fraction(measure.total_mass).denominator != 1:
        measure = FiniteMeasure(
            drift=measure.drift,
            atoms=(*measure.atoms, Atom(boundary, Fraction(1, 2))),
        )
    return measure


def _key2_instance(rng: np.random.Generator) -> bool:
    mu = random_lattice_measure(rng)
    walk = walk_until_hit(mu.mass_units(1), rng, 1, KEY2_WALK_BUDGET)
    return key2_identities_hold(mu, walk)


def _key2_replica(cfg: McConfig, index: int) -> tuple[bool, int]:
    return retrying(_key2_instance, cfg, index)


@beartype
def verify_key2_identities(cfg: McConfig) -> TestReport:
    """Check the pathwise spine identities on ``cfg.replicas`` random lattice instances.

    Measures mix drift and atoms, δ = 1, and all arithmetic is exact.
    """
    started = time.perf_counter()
    logger.info("Suite key2-identities started with %s", cfg.provenance())
    results = run_replicas(partial(_key2_replica, cfg), cfg.replicas, cfg)
    failures = sum(not held for held, _ in results)
    retries = sum(spent for _, spent in results)
    rows = [StatRow(functional="identity_failures", statistic=failures)]
    params: dict[str, ParamValue] = {
        **cfg.provenance(),
        "walk_budget": KEY2_WALK_BUDGET,
        "retries": retries,
    }
    return _finish("key2-identities", rows, failures == 0, params, started, cfg.seed)
