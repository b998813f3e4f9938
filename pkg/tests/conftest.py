"""Pytest configuration file."""

from fractions import Fraction

import numpy as np
import pytest

from levytree.config import McConfig
from levytree.paths import ContourExcursion
from levytree.rng import stream
from levytree.spine import Atom, DriftSegment, FiniteMeasure

EXAMPLE_CONTOUR = (0, 1, 2, 3, 2, 1, 2, 1, 0)


@pytest.fixture
def rng() -> np.random.Generator:
    """A fixed-seed generator, fresh for every test."""
    return stream(20_241_017)


@pytest.fixture
def contour() -> ContourExcursion:
    """The 4-edge contour (0,1,2,3,2,1,2,1,0) shared by many tests."""
    return ContourExcursion(EXAMPLE_CONTOUR)


@pytest.fixture
def small_cfg() -> McConfig:
    """A Monte Carlo configuration small enough for unit tests."""
    return McConfig(grid=64, replicas=100, seed=7)


@pytest.fixture
def drift_and_atom() -> FiniteMeasure:
    """Drift 1 on [0, 2] plus an atom of mass 3 at 1/2."""
    return FiniteMeasure(
        drift=(DriftSegment(0, 2, 1),),
        atoms=(Atom(Fraction(1, 2), 3),),
    )
