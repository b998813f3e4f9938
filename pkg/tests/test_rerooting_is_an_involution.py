"""Test the re-rooting transform H -> H^[s]."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from levytree.coding import distance_matrix, isometry_check
from levytree.errors import DomainError, PrecisionError
from levytree.paths import (
    ContourExcursion,
    is_dyck,
    reroot,
    shift_time,
    split_identity_holds,
)
from tests.strategies import dyck_paths, float_excursions
from tests.utils import excursion, samples


def test_reroot_at_a_vertex_of_the_example(contour: ContourExcursion) -> None:
    """Test H^[6] of (0,1,2,3,2,1,2,1,0)."""
    assert samples(reroot(contour, 6)) == [0, 1, 2, 1, 2, 3, 2, 1, 0]


def test_reroot_at_zero_and_at_sigma_is_the_identity(contour: ContourExcursion) -> None:
    """Test that the root and the end of the contour are the same vertex."""
    assert reroot(contour, 0).same_as(contour)
    assert reroot(contour, contour.duration).same_as(contour)


def test_reroot_fixes_a_symmetric_path() -> None:
    """Test that re-rooting the two-edge path at its tip gives it back."""
    h = excursion(0, 1, 2, 1, 0)
    assert reroot(h, 2).same_as(h)


def test_reroot_needs_a_grid_time(contour: ContourExcursion) -> None:
    """Test that off-grid and out-of-range times are rejected."""
    with pytest.raises(PrecisionError):
        reroot(contour, 2.5)
    with pytest.raises(DomainError):
        reroot(contour, 9)


def test_reroot_of_a_float_excursion_uses_float_grid_times() -> None:
    """Test re-rooting a normalized excursion at a grid time given as a float."""
    h = ContourExcursion(np.array([0.0, 0.5, 1.5, 0.5, 0.0]), 0.25)
    rerooted = reroot(h, 0.5)
    assert rerooted.step == h.step
    assert samples(rerooted) == [0.0, 1.0, 1.5, 1.0, 0.0]


@given(dyck_paths(), st.data())
def test_reroot_is_an_involution_on_dyck_paths(
    h: ContourExcursion,
    data: st.DataObject,
) -> None:
    """Test that (H^[s])^[σ-s] = H and that H^[s] is again a Dyck path."""
    s = data.draw(st.integers(0, h.size))
    rerooted = reroot(h, s)
    assert is_dyck(rerooted)
    assert rerooted.size == h.size
    assert reroot(rerooted, h.size - s).same_as(h)


@given(dyck_paths(), st.data())
def test_split_identity_on_dyck_paths(h: ContourExcursion, data: st.DataObject) -> None:
    """Test that tilde of both halves of the split reads off H^[s]."""
    assert split_identity_holds(h, data.draw(st.integers(0, h.size)))


@given(dyck_paths(), st.data())
def test_rerooting_is_an_isometry(h: ContourExcursion, data: st.DataObject) -> None:
    """Test d_{H^[s]}(t, t') = d_H(s ⊕ t, s ⊕ t') exactly on lattice paths."""
    s = data.draw(st.integers(0, h.size))
    times = data.draw(st.lists(st.integers(0, h.size), min_size=1, max_size=5))
    assert isometry_check(h, s, list(times), atol=0.0)


@given(float_excursions(), st.data())
def test_rerooting_is_an_isometry_on_float_paths(
    h: ContourExcursion,
    data: st.DataObject,
) -> None:
    """Test the isometry on float samples with integer grid indices."""
    unit = ContourExcursion(h.samples, 1)
    s = data.draw(st.integers(0, unit.size))
    times = data.draw(st.lists(st.integers(0, unit.size), min_size=1, max_size=4))
    plain = distance_matrix(unit, [shift_time(unit.size, s, t) for t in times])
    assert distance_matrix(reroot(unit, s), list(times)).close_to(plain, atol=1e-9)


def test_isometry_example(contour: ContourExcursion) -> None:
    """Test the isometry at s = 6 with the times 2 and 5."""
    assert isometry_check(contour, 6, [2, 5])
    assert distance_matrix(reroot(contour, 6), [2, 5]).values[0, 1] == 3
    assert distance_matrix(contour, [0, 3]).values[0, 1] == 3


@pytest.mark.parametrize(("t", "expected"), [(0, 6), (1, 7), (2, 0), (3, 1), (8, 6)])
def test_shift_time_wraps_around_sigma(t: int, expected: int) -> None:
    """Test s ⊕ t for σ = 8 and s = 6."""
    assert shift_time(8, 6, t) == expected
