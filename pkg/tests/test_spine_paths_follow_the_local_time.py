"""Test the spine paths H^μ, their sampler and the pathwise identities behind reversal."""

from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from levytree.errors import InputError
from levytree.generators import WalkPath, height_of_walk
from levytree.paths import FinitePath
from levytree.rng import stream
from levytree.spine import (
    FiniteMeasure,
    SpinePath,
    key2_identities_hold,
    sample_Q,
    spine_path,
)
from levytree.spine import paths as spine_paths
from levytree.types import SpineScheme
from tests.strategies import descending_walks, lattice_measures
from tests.utils import samples


def test_records_spine_of_lebesgue_measure() -> None:
    """Test H^μ = S(k_{-I} μ) + H for Leb[0, 2] and a walk with two excursions."""
    walk = WalkPath((0, 1, 0, -1, 0, -1, -2))
    spine = spine_path(FiniteMeasure.lebesgue(2), walk, "records")
    assert samples(spine.path) == [2, 3, 3, 1, 2, 2, 0]
    assert spine.duration == 6


def test_records_spine_of_a_dipping_walk() -> None:
    """Test H^μ for Leb[0, 2] and X = (0, -1, 0, 1, 0, -1, -2), and its running minimum."""
    walk = WalkPath((0, -1, 0, 1, 0, -1, -2))
    spine = spine_path(FiniteMeasure.lebesgue(2), walk, "records")
    assert samples(height_of_walk(spine.walk)) == [0, 0, 1, 2, 2, 1, 0]
    assert samples(spine.path) == [2, 1, 2, 3, 3, 2, 0]
    assert np.minimum.accumulate(spine.path.samples).tolist() == [2, 1, 1, 1, 1, 1, 0]


def test_records_spine_of_a_single_step() -> None:
    """Test Leb[0, 1] with X = (0, -1)."""
    spine = spine_path(FiniteMeasure.lebesgue(1), WalkPath((0, -1)), "records")
    assert samples(spine.path) == [1, 0]


def test_symmetric_spine_places_excursions_at_half_levels() -> None:
    """Test the framed path (S(μ), S(k_{δ/2} μ), 0) for Leb[0, 1] and X = (0, -1)."""
    spine = spine_path(FiniteMeasure.lebesgue(1), WalkPath((0, -1)), "symmetric")
    assert samples(spine.path) == [1.0, 0.5, 0.0]


def test_spine_stops_the_walk_at_the_hit() -> None:
    """Test that steps after T_{|μ|} are dropped."""
    walk = WalkPath((0, -1, -2, -1, -2))
    spine = spine_path(FiniteMeasure.lebesgue(2), walk, "records")
    assert spine.walk.length == 2
    assert samples(spine.path) == [2, 1, 0]


@pytest.mark.parametrize("scheme", ["records", "symmetric"])
def test_spine_endpoints(drift_and_atom: FiniteMeasure, scheme: SpineScheme) -> None:
    """Test that both schemes start at S(μ) = 2 and end at 0 with δ = 1/4."""
    values = [0, *range(-1, -21, -1)]
    values[6:6] = [-4, -3, -4, -5]
    walk = WalkPath(values, Fraction(1, 4))
    spine = spine_path(drift_and_atom, walk, scheme)
    assert spine.path.samples[0] == 2
    assert spine.path.samples[-1] == 0
    assert spine.path.step == pytest.approx(1 / 16)
    assert np.all(spine.path.samples >= 0)


def test_spine_needs_the_walk_to_reach_the_mass() -> None:
    """Test that a walk that never hits -|μ| is rejected."""
    with pytest.raises(InputError):
        spine_path(FiniteMeasure.lebesgue(2), WalkPath((0, 1, 0, -1)))


def test_spine_needs_a_lattice_mass() -> None:
    """Test that |μ| must be a multiple of δ."""
    with pytest.raises(InputError):
        spine_path(FiniteMeasure.lebesgue(1), WalkPath((0, -1), Fraction(2, 3)))


def test_key2_identities_on_the_example(drift_and_atom: FiniteMeasure) -> None:
    """Test the running minimum and mirror identities for a walk with excursions."""
    values = [0, 1, 2, 1, 0, -1, 0, -1, *range(-2, -21, -1)]
    assert key2_identities_hold(drift_and_atom, WalkPath(values, Fraction(1, 4)))


def test_key2_identities_check_the_produced_spine(
    drift_and_atom: FiniteMeasure,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Test that a spine path off the formula S(k_{-I} μ) + H fails the identities."""
    built = spine_paths.spine_path

    def lifted(mu: FiniteMeasure, walk: WalkPath, scheme: SpineScheme = "records") -> SpinePath:
        spine = built(mu, walk, scheme)
        values = spine.path.samples.copy()
        values[3] += 1
        return replace(spine, path=FinitePath(values, spine.path.step))

    monkeypatch.setattr(spine_paths, "spine_path", lifted)
    values = [0, 1, 2, 1, 0, -1, 0, -1, *range(-2, -21, -1)]
    assert not key2_identities_hold(drift_and_atom, WalkPath(values, Fraction(1, 4)))


@given(lattice_measures(), st.data())
def test_key2_identities_on_lattice_measures(mu: FiniteMeasure, data: st.DataObject) -> None:
    """Test the identities exactly for random lattice measures and walks."""
    walk = data.draw(descending_walks(mu.mass_units(1)))
    assert key2_identities_hold(mu, walk)


@given(lattice_measures(), st.data())
def test_records_spine_never_dips_below_the_baseline(
    mu: FiniteMeasure,
    data: st.DataObject,
) -> None:
    """Test that the running minimum of H^μ is the baseline S(k_{-I} μ)."""
    walk = data.draw(descending_walks(mu.mass_units(1)))
    spine = spine_path(mu, walk, "records")
    running = np.minimum.accumulate(spine.path.samples)
    local = -spine.walk.running_min
    baselines = [float(mu.truncate(min(mu.total_mass, j)).support_max) for j in local.tolist()]
    assert running.tolist() == pytest.approx(baselines)


def test_sample_q_starts_at_the_support() -> None:
    """Test a sampled spine of Leb[0, 1] with δ = 1/2."""
    spine = sample_Q(FiniteMeasure.lebesgue(1), stream(3), delta=Fraction(1, 2))
    assert spine.path.samples[0] == 1
    assert spine.path.samples[-1] == 0
    assert spine.walk.values[-1] == -2
    assert spine.scheme == "symmetric"


def test_sample_q_needs_a_lattice_mass() -> None:
    """Test that |μ| must be a multiple of δ before any walk is drawn."""
    with pytest.raises(InputError):
        sample_Q(FiniteMeasure.lebesgue(1), stream(0), delta=Fraction(2, 3))
