"""Test construction, grid arithmetic, the path metric and CSV files of finite paths."""

from pathlib import Path

import numpy as np
import pytest

from levytree.errors import DomainError, PathFormatError, PrecisionError
from levytree.paths import (
    ContourExcursion,
    FinitePath,
    LatticePath,
    SparseTable,
    path_distance,
    read_path,
    write_path,
)


@pytest.mark.parametrize(
    ("samples", "step"),
    [((), 1), ((0, 1), 0), ((0, 1), -1.0), ((0.0, float("nan")), 1)],
)
def test_invalid_paths_are_domain_errors(samples: tuple[float, ...], step: float) -> None:
    """Test empty samples, nonpositive steps and non-finite samples."""
    with pytest.raises(DomainError):
        FinitePath(samples, step)


def test_excursions_are_nonnegative_and_pinned() -> None:
    """Test the excursion invariants."""
    with pytest.raises(DomainError):
        ContourExcursion((0, 1, 1))
    with pytest.raises(DomainError):
        ContourExcursion((0, -1, 0))


@pytest.mark.parametrize("dtype", [np.float32, np.float64, np.int32, np.int64])
def test_paths_accept_numpy_arrays_of_any_width(dtype: type[np.generic]) -> None:
    """Test that the checked constructor takes float and integer arrays of every width."""
    path = FinitePath(np.array([0, 2, 1], dtype=dtype), 1)
    expected = np.int64 if np.issubdtype(dtype, np.integer) else np.float64
    assert path.samples.dtype == expected
    assert path.samples.tolist() == [0, 2, 1]


def test_lattice_paths_are_integer_on_the_unit_grid() -> None:
    """Test the lattice path invariants."""
    with pytest.raises(DomainError):
        LatticePath((0.0, 0.5))
    with pytest.raises(DomainError):
        LatticePath((0, 1), step=2)


def test_samples_are_read_only() -> None:
    """Test that a path cannot be changed through its sample array."""
    path = FinitePath((0, 1, 0))
    with pytest.raises(ValueError, match="read-only"):
        path.samples[0] = 5


def test_grid_index_and_snap() -> None:
    """Test grid arithmetic on a float grid."""
    path = FinitePath(np.zeros(11), 0.1)
    assert path.lifetime == pytest.approx(1.0)
    assert path.grid_index(0.3) == 3
    with pytest.raises(PrecisionError):
        path.grid_index(0.35)
    assert path.snap(0.34) == pytest.approx(0.3)
    with pytest.raises(DomainError):
        path.snap(1.5)


def test_integer_grid_index_is_exact() -> None:
    """Test that integer times on an integer grid avoid floating point."""
    path = FinitePath(np.zeros(9, dtype=np.int64), 2)
    assert path.grid_index(16) == 8
    with pytest.raises(PrecisionError):
        path.grid_index(3)


def test_path_distance_counts_lifetimes() -> None:
    """Test d(w, w') = sup |w - w'| + |ζ - ζ'| with stopped paths."""
    w = FinitePath((0, 1, 0))
    assert path_distance(w, w) == 0
    assert path_distance(w, FinitePath((0, 1, 0, 0))) == 1
    assert path_distance(w, FinitePath((0, 3, 0))) == 2


def test_sparse_table_answers_range_minima(rng: np.random.Generator) -> None:
    """Test the sparse table against direct scans."""
    values = rng.integers(-50, 50, size=200)
    table = SparseTable(values)
    for i, j in rng.integers(0, 200, size=(50, 2)).tolist():
        low, high = min(i, j), max(i, j)
        assert table.query(low, high) == values[low : high + 1].min()


def test_path_csv_round_trip(tmp_path: Path) -> None:
    """Test writing and reading integer and float path files."""
    lattice = ContourExcursion((0, 1, 2, 1, 0))
    write_path(lattice, tmp_path / "lattice.csv")
    restored = read_path(tmp_path / "lattice.csv", ContourExcursion)
    assert restored.same_as(lattice)
    assert restored.is_integer
    normalized = ContourExcursion(np.array([0.0, 0.1, 0.7, 0.0]), 1 / 3)
    write_path(normalized, tmp_path / "float.csv")
    again = read_path(tmp_path / "float.csv", ContourExcursion)
    assert np.array_equal(again.samples, normalized.samples)
    assert again.step == pytest.approx(1 / 3)


@pytest.mark.parametrize(
    "content",
    [
        "time,value\n0,0\n",
        "t,value\n",
        "t,value\n0,0\n1,x\n",
        "t,value\n0,0\n1,1\n3,0\n",
        "t,value\n1,0\n2,0\n",
    ],
)
def test_malformed_path_files(tmp_path: Path, content: str) -> None:
    """Test that bad headers, numbers and spacing raise PathFormatError."""
    source = tmp_path / "bad.csv"
    source.write_text(content)
    with pytest.raises(PathFormatError):
        read_path(source)
