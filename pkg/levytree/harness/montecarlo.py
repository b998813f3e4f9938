"""Monte Carlo verification suites.

Every suite draws replicas from their own substreams ``(seed, index)``, so a
report depends on the configuration but never on the worker hint. Two-sample
suites use replicas ``[0, N)`` for one side and ``[N, 2N)`` for the other.
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from pathlib import Path

import numpy as np
from beartype import beartype

from levytree.coding import mass_sample, triplet, uniform_reroot
from levytree.config import McConfig
from levytree.errors import DomainError
from levytree.generators import LevyModel, model_excursion
from levytree.harness.functionals import FunctionalSpec, default_battery, evaluate_battery
from levytree.harness.replicas import retrying, run_replicas
from levytree.harness.reports import StatRow, TestReport
from levytree.harness.stats import (
    bonferroni,
    bonferroni_threshold,
    ks_two_sample,
    ks_uniform,
    two_sided_normal_p,
    z_score,
)
from levytree.paths import FinitePath, reroot, reverse, tilde
from levytree.snake import ise_right_mass, write_right_mass_rows
from levytree.spine import Atom, DriftSegment, FiniteMeasure, sample_Q
from levytree.types import ParamValue, SpineScheme

logger: logging.Logger = logging.getLogger("levytree")

MOMENT_Z_LIMIT = 4.0
DEFAULT_ISE_VERTICES = 500
KEY2_DELTA = Fraction(1, 4)

type Replica = tuple[list[float], int]


def _elapsed_ms(started: float) -> float:
    return (time.perf_counter() - started) * 1000.0


def _started(suite: str, cfg: McConfig, **extra: ParamValue) -> float:
    logger.info("Suite %s started with %s %s", suite, cfg.provenance(), extra)
    return time.perf_counter()


def _finish(
    suite: str,
    cfg: McConfig,
    rows: list[StatRow],
    passed: bool,
    params: dict[str, ParamValue],
    started: float,
) -> TestReport:
    report = TestReport(
        suite=suite,
        mode="statistical",
        params={**cfg.provenance(), **params},
        seed=cfg.seed,
        stats=rows,
        passed=passed,
        runtime_ms=_elapsed_ms(started),
    )
    logger.info(
        "Suite %s finished: %s (min p %s)",
        suite,
        "pass" if passed else "FAIL",
        report.min_p,
    )
    return report


def _compare_battery(
    battery: list[FunctionalSpec],
    first: list[list[float]],
    second: list[list[float]],
) -> tuple[list[StatRow], list[float]]:
    """One two-sample KS row per functional."""
    rows: list[StatRow] = []
    p_values: list[float] = []
    for column, spec in enumerate(battery):
        result = ks_two_sample(
            [values[column] for values in first],
            [values[column] for values in second],
        )
        rows.append(StatRow(functional=spec.name, statistic=result.statistic, p=result.p))
        p_values.append(result.p)
    return rows, p_values


def _bonferroni_params(alpha: float, m: int, retries: int) -> dict[str, ParamValue]:
    return {"m": m, "threshold": bonferroni_threshold(alpha, m), "retries": retries}


@beartype
@dataclass(frozen=True, kw_only=True)
class _RerootingRun:
    """Picklable replica function of the re-rooting suites.

    Replica i < N evaluates the battery on a re-rooted excursion of ``model``;
    replica i >= N on a plain excursion of ``control`` (``model`` when
    unset). With ``reuse`` the plain side redraws the excursions of [0, N).
    """

    cfg: McConfig
    model: LevyModel
    battery: list[FunctionalSpec]
    s0: float | None
    control: LevyModel | None = None
    reuse: bool = False

    def rerooted(self, rng: np.random.Generator) -> list[float]:
        """The battery on H^[s0·σ], or on a uniformly re-rooted H when s0 is unset."""
        h = model_excursion(self.model, self.cfg.grid, rng)
        if self.s0 is None:
            return evaluate_battery(self.battery, uniform_reroot(h, rng))
        s = h.snap(self.s0 * h.duration)
        return evaluate_battery(self.battery, reroot(h, s))

    def plain(self, rng: np.random.Generator) -> list[float]:
        """The battery on H itself."""
        source = self.model if self.control is None else self.control
        return evaluate_battery(self.battery, model_excursion(source, self.cfg.grid, rng))

    def __call__(self, index: int) -> Replica:
        """Run replica ``index``."""
        replicas = self.cfg.replicas
        if index < replicas:
            return retrying(self.rerooted, self.cfg, index)
        stream_index = index - replicas if self.reuse else index
        return retrying(self.plain, self.cfg, stream_index)


def _run_rerooting(run: _RerootingRun, suite: str, started: float) -> TestReport:
    cfg = run.cfg
    results = run_replicas(run, 2 * cfg.replicas, cfg)
    values = [battery_values for battery_values, _ in results]
    retries = sum(spent for _, spent in results)
    rows, p_values = _compare_battery(
        run.battery,
        values[: cfg.replicas],
        values[cfg.replicas :],
    )
    params: dict[str, ParamValue] = {
        "model": run.model.describe(),
        "control": None if run.control is None else run.control.describe(),
        "s0": run.s0,
        "reuse_replicas": run.reuse,
        "battery": [spec.name for spec in run.battery],
        **_bonferroni_params(cfg.alpha, len(p_values), retries),
    }
    return _finish(suite, cfg, rows, bonferroni(p_values, cfg.alpha), params, started)


@beartype
def verify_fixed_s_mc(
    model: LevyModel,
    s0: float,
    cfg: McConfig,
    battery: list[FunctionalSpec] | None = None,
    control: LevyModel | None = None,
    reuse_replicas: bool = False,
) -> TestReport:
    """Compare φ(H^[s0·σ]) with φ(H) for every battery functional φ.

    ``s0·σ`` is snapped to the excursion's grid. With ``control`` the plain
    side comes from another model, which is expected to fail. With
    ``reuse_replicas`` both sides use the same excursions; at s0 = 0 every
    statistic is then exactly 0.

    Raises:
        DomainError: ``s0`` lies outside [0, 1).

    """
    if not 0 <= s0 < 1:
        msg = f"s0 must lie in [0, 1), got {s0}."
        raise DomainError(msg)
    started = _started("fixed-s", cfg, model=model.describe(), s0=s0)
    run = _RerootingRun(
        cfg=cfg,
        model=model,
        battery=battery if battery is not None else default_battery(),
        s0=s0,
        control=control,
        reuse=reuse_replicas,
    )
    return _run_rerooting(run, "fixed-s", started)


@beartype
def verify_uniform_reroot_mc(
    model: LevyModel,
    cfg: McConfig,
    battery: list[FunctionalSpec] | None = None,
) -> TestReport:
    """Compare φ of a uniformly re-rooted excursion with φ(H)."""
    started = _started("uniform-reroot", cfg, model=model.describe())
    run = _RerootingRun(
        cfg=cfg,
        model=model,
        battery=battery if battery is not None else default_battery(),
        s0=None,
    )
    return _run_rerooting(run, "uniform-reroot", started)


def _triplet_values(model: LevyModel, grid: int, rng: np.random.Generator) -> list[float]:
    h = model_excursion(model, grid, rng)
    u, v = mass_sample(h, rng, 2)
    return [float(value) for value in triplet(h, u, v)]


def _triplet_replica(cfg: McConfig, model: LevyModel, index: int) -> Replica:
    return retrying(partial(_triplet_values, model, cfg.grid), cfg, index)


@beartype
def verify_triplet(cfg: McConfig, model: LevyModel | None = None) -> TestReport:
    """Check that the triplet (H_u - m, H_v - m, m) is exchangeable.

    u and v are independent mass-measure times and m is the minimum of H
    between them. Component i of the first N replicas is compared with
    component j of the last N for every pair i < j. Moment rows compare
    E[x0·x1] with E[x1·x2] and E[x0·x2], and E[x0·x1²] with E[x1·x0²], through
    paired z-scores; the suite passes when the KS family passes Bonferroni and
    every |z| is at most 4.
    """
    model = model if model is not None else LevyModel.brownian()
    started = _started("triplet", cfg, model=model.describe())
    results = run_replicas(partial(_triplet_replica, cfg, model), 2 * cfg.replicas, cfg)
    values = np.array([components for components, _ in results], dtype=np.float64)
    retries = sum(spent for _, spent in results)
    first, second = values[: cfg.replicas], values[cfg.replicas :]
    rows: list[StatRow] = []
    p_values: list[float] = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        result = ks_two_sample(first[:, i], second[:, j])
        rows.append(
            StatRow(
                functional=f"component({i}) vs component({j})",
                statistic=result.statistic,
                p=result.p,
            ),
        )
        p_values.append(result.p)
    products = {
        "x0*x1": values[:, 0] * values[:, 1],
        "x1*x2": values[:, 1] * values[:, 2],
        "x0*x2": values[:, 0] * values[:, 2],
        "x0*x1^2": values[:, 0] * values[:, 1] ** 2,
        "x1*x0^2": values[:, 1] * values[:, 0] ** 2,
    }
    moments_agree = True
    for left, other in (("x0*x1", "x1*x2"), ("x0*x1", "x0*x2"), ("x0*x1^2", "x1*x0^2")):
        z = z_score(products[left] - products[other])
        moments_agree = moments_agree and abs(z) <= MOMENT_Z_LIMIT
        rows.append(
            StatRow(
                functional=f"E[{left}] - E[{other}] z",
                statistic=z,
                p=two_sided_normal_p(z),
            ),
        )
    passed = bonferroni(p_values, cfg.alpha) and moments_agree
    params: dict[str, ParamValue] = {
        "model": model.describe(),
        "moment_z_limit": MOMENT_Z_LIMIT,
        **_bonferroni_params(cfg.alpha, len(p_values), retries),
    }
    return _finish("triplet", cfg, rows, passed, params, started)


def _ise_value(model: LevyModel, grid: int, k: int, rng: np.random.Generator) -> float:
    return ise_right_mass(model_excursion(model, grid, rng), k, rng)


def _ise_replica(cfg: McConfig, model: LevyModel, k: int, index: int) -> tuple[float, int]:
    return retrying(partial(_ise_value, model, cfg.grid, k), cfg, index)


@beartype
def verify_ise(
    cfg: McConfig,
    k: int = DEFAULT_ISE_VERTICES,
    model: LevyModel | None = None,
    right_mass_csv: Path | None = None,
) -> TestReport:
    """Check that the ISE mass of (0, ∞) is uniform on [0, 1].

    Each replica estimates the mass from ``k`` mass-sampled vertices of one
    excursion. With ``right_mass_csv`` the per-replica estimates are appended
    as ``tree_id,k,right_mass`` rows.
    """
    if k < 1:
        msg = f"Need at least one vertex per tree, got k={k}."
        raise DomainError(msg)
    model = model if model is not None else LevyModel.brownian()
    started = _started("ise", cfg, model=model.describe(), k=k)
    results = run_replicas(partial(_ise_replica, cfg, model, k), cfg.replicas, cfg)
    masses = [mass for mass, _ in results]
    retries = sum(spent for _, spent in results)
    if right_mass_csv is not None:
        write_right_mass_rows(
            ((index, k, mass) for index, mass in enumerate(masses)),
            right_mass_csv,
        )
    result = ks_uniform(masses)
    rows = [StatRow(functional="right_mass", statistic=result.statistic, p=result.p)]
    params: dict[str, ParamValue] = {
        "model": model.describe(),
        "k": k,
        "mean_right_mass": float(np.mean(masses)),
        **_bonferroni_params(cfg.alpha, 1, retries),
    }
    return _finish("ise", cfg, rows, bonferroni([result.p], cfg.alpha), params, started)


@beartype
@dataclass(frozen=True, kw_only=True)
class _SpineRun:
    """Picklable replica function of the spine reversal suite.

    Replica i < N evaluates the battery on tilde(H^μ); replica i >= N on the
    reversal of H^μ̄.
    """

    cfg: McConfig
    measure: FiniteMeasure
    delta: int | float | Fraction
    battery: list[FunctionalSpec]
    scheme: SpineScheme

    def _sample(self, mu: FiniteMeasure, rng: np.random.Generator) -> FinitePath:
        return sample_Q(mu, rng, self.delta, self.cfg.step_budget, self.scheme).path

    def tilded(self, rng: np.random.Generator) -> list[float]:
        """The battery on tilde(H^μ)."""
        return evaluate_battery(self.battery, tilde(self._sample(self.measure, rng)))

    def reversed_mirror(self, rng: np.random.Generator) -> list[float]:
        """The battery on the reversal of H^μ̄."""
        path = self._sample(self.measure.reversed(), rng)
        return evaluate_battery(self.battery, reverse(path))

    def __call__(self, index: int) -> Replica:
        """Run replica ``index``."""
        if index < self.cfg.replicas:
            return retrying(self.tilded, self.cfg, index)
        return retrying(self.reversed_mirror, self.cfg, index)


@beartype
def verify_key2(
    mu: FiniteMeasure,
    cfg: McConfig,
    delta: int | float | Fraction = KEY2_DELTA,
    battery: list[FunctionalSpec] | None = None,
    scheme: SpineScheme = "symmetric",
) -> TestReport:
    """Compare tilde(H^μ) under Q_μ with the reversal of H^μ̄ under Q_μ̄.

    Walks that exhaust ``cfg.step_budget`` are censored and redrawn on a
    fresh substream; the number of censored walks is reported as retries.

    Raises:
        InputError: |μ| is not a multiple of ``delta``.

    """
    units = mu.mass_units(delta)
    battery = battery if battery is not None else default_battery()
    started = _started("key2", cfg, measure=mu.to_json(), delta=str(delta))
    run = _SpineRun(cfg=cfg, measure=mu, delta=delta, battery=battery, scheme=scheme)
    results = run_replicas(run, 2 * cfg.replicas, cfg)
    values = [battery_values for battery_values, _ in results]
    retries = sum(spent for _, spent in results)
    if retries:
        logger.info(
            "Censored %d spine walks at a budget of %d steps",
            retries,
            cfg.step_budget,
        )
    rows, p_values = _compare_battery(
        battery,
        values[: cfg.replicas],
        values[cfg.replicas :],
    )
    params: dict[str, ParamValue] = {
        "measure": mu.to_json(),
        "delta": str(delta),
        "units": units,
        "scheme": scheme,
        "battery": [spec.name for spec in battery],
        **_bonferroni_params(cfg.alpha, len(p_values), retries),
    }
    return _finish("key2", cfg, rows, bonferroni(p_values, cfg.alpha), params, started)


def _reversal_values(
    model: LevyModel,
    grid: int,
    battery: list[FunctionalSpec],
    flip: bool,
    rng: np.random.Generator,
) -> list[float]:
    h = model_excursion(model, grid, rng)
    return evaluate_battery(battery, reverse(h) if flip else h)


def _reversal_replica(
    cfg: McConfig,
    model: LevyModel,
    battery: list[FunctionalSpec],
    index: int,
) -> Replica:
    flip = index >= cfg.replicas
    return retrying(partial(_reversal_values, model, cfg.grid, battery, flip), cfg, index)


@beartype
def verify_time_reversal(
    cfg: McConfig,
    model: LevyModel | None = None,
    battery: list[FunctionalSpec] | None = None,
) -> TestReport:
    """Compare φ(H) with φ of the reversed excursion t -> H(σ - t)."""
    model = model if model is not None else LevyModel.brownian()
    battery = battery if battery is not None else default_battery()
    started = _started("time-reversal", cfg, model=model.describe())
    results = run_replicas(
        partial(_reversal_replica, cfg, model, battery),
        2 * cfg.replicas,
        cfg,
    )
    values = [battery_values for battery_values, _ in results]
    retries = sum(spent for _, spent in results)
    rows, p_values = _compare_battery(
        battery,
        values[: cfg.replicas],
        values[cfg.replicas :],
    )
    params: dict[str, ParamValue] = {
        "model": model.describe(),
        "battery": [spec.name for spec in battery],
        **_bonferroni_params(cfg.alpha, len(p_values), retries),
    }
    return _finish(
        "time-reversal",
        cfg,
        rows,
        bonferroni(p_values, cfg.alpha),
        params,
        started,
    )


@beartype
def default_key2_measure() -> FiniteMeasure:
    """Drift 1 on [0, 2] plus an atom of mass 3 at 1/2; total mass 5."""
    return FiniteMeasure(
        drift=(DriftSegment(0, 2, 1),),
        atoms=(Atom(Fraction(1, 2), 3),),
    )
