"""Finite paths sampled on a uniform grid."""

import math
from dataclasses import dataclass
from typing import Self

import numpy as np
import numpy.typing as npt
from beartype import beartype

from levytree.errors import DomainError, PrecisionError
from levytree.types import SampleArray, SampleInput, Time

GRID_TOLERANCE = 1e-9
"""Relative slack when deciding whether a float time is a grid point."""


def _as_samples(values: SampleInput) -> SampleArray:
    array = np.asarray(values)
    if array.ndim != 1:
        msg = f"Path samples must be one-dimensional, got shape {array.shape}."
        raise DomainError(msg)
    if np.issubdtype(array.dtype, np.integer) or array.dtype == np.bool_:
        array = array.astype(np.int64)
    else:
        array = array.astype(np.float64)
        if not np.all(np.isfinite(array)):
            msg = "Path samples must be finite."
            raise DomainError(msg)
    array.setflags(write=False)
    return array


@beartype
@dataclass(frozen=True, eq=False, init=False)
class FinitePath:
    """A continuous path w: [0, ζ] -> R sampled on a uniform grid.

    Between grid points the path is the linear interpolation of its samples,
    so the infimum over any interval is attained at a grid point or at one of
    the interval endpoints.

    Attributes:
        samples: The heights at the grid times 0, Δ, 2Δ, ..., ζ. Integer
            arrays stay integer through every deterministic transform.
        step: The grid spacing Δ > 0.

    """

    samples: SampleArray
    step: float | int = 1

    def __init__(self, samples: SampleInput, step: float | int = 1) -> None:
        """Validate and freeze the samples."""
        array = _as_samples(samples)
        if array.size < 1:
            msg = "A finite path needs at least one sample."
            raise DomainError(msg)
        if not step > 0 or not math.isfinite(step):
            msg = f"The grid step must be positive and finite, got {step}."
            raise DomainError(msg)
        object.__setattr__(self, "samples", array)
        object.__setattr__(self, "step", step)
        self._validate()

    def _validate(self) -> None:
        """Check subclass invariants."""

    @property
    def size(self) -> int:
        """Number of grid intervals."""
        return int(self.samples.size - 1)

    @property
    def lifetime(self) -> float | int:
        """The lifetime ζ = size * Δ."""
        return self.size * self.step

    @property
    def times(self) -> npt.NDArray[np.float64]:
        """The grid times."""
        return np.arange(self.samples.size, dtype=np.float64) * self.step

    @property
    def is_integer(self) -> bool:
        """Whether the samples are integers."""
        return bool(np.issubdtype(self.samples.dtype, np.integer))

    def with_samples(self, samples: SampleInput) -> Self:
        """Return a path of the same kind and step with new samples."""
        return type(self)(samples, self.step)

    def check_time(self, t: Time) -> None:
        """Raise DomainError unless 0 <= t <= ζ."""
        if not 0 <= t <= self.lifetime:
            msg = f"Time {t} lies outside [0, {self.lifetime}]."
            raise DomainError(msg)

    def grid_index(self, t: Time) -> int:
        """Return the grid index of the grid time ``t``.

        Raises:
            DomainError: ``t`` lies outside [0, ζ].
            PrecisionError: ``t`` is not a grid point.

        """
        self.check_time(t)
        if isinstance(t, int) and isinstance(self.step, int):
            index, remainder = divmod(t, self.step)
            if remainder:
                msg = f"Time {t} is not a multiple of the grid step {self.step}."
                raise PrecisionError(msg)
            return index
        position = float(t) / self.step
        index = round(position)
        if abs(position - index) > GRID_TOLERANCE * max(1.0, position):
            msg = f"Time {t} is not a grid point of a path with step {self.step}."
            raise PrecisionError(msg)
        return int(index)

    def snap(self, t: Time) -> float | int:
        """Return the grid time nearest to ``t``."""
        self.check_time(t)
        index = min(round(float(t) / self.step), self.size)
        return index * self.step

    def same_as(self, other: "FinitePath", atol: float = 0.0) -> bool:
        """Compare samples and step, within ``atol`` for the samples."""
        if self.samples.size != other.samples.size or self.step != other.step:
            return False
        if atol == 0:
            return bool(np.array_equal(self.samples, other.samples))
        return bool(np.allclose(self.samples, other.samples, rtol=0.0, atol=atol))

    def __len__(self) -> int:
        """Number of samples."""
        return int(self.samples.size)

    def __repr__(self) -> str:
        """Short representation."""
        shown = self.samples.tolist() if self.samples.size <= 12 else "..."
        return f"{type(self).__name__}({shown}, step={self.step})"


class ContourExcursion(FinitePath):
    """A contour (height) function H on [0, σ] with H(0) = H(σ) = 0 and H >= 0."""

    def _validate(self) -> None:
        if self.samples[0] != 0 or self.samples[-1] != 0:
            msg = "An excursion must start and end at 0."
            raise DomainError(msg)
        if np.any(self.samples < 0):
            msg = "An excursion must be nonnegative."
            raise DomainError(msg)

    @property
    def duration(self) -> float | int:
        """The duration σ."""
        return self.lifetime

    @classmethod
    def from_path(cls, path: FinitePath) -> "ContourExcursion":
        """Validate an arbitrary path as an excursion."""
        return cls(path.samples, path.step)


class LatticePath(FinitePath):
    """An integer path on the unit grid."""

    def __init__(self, samples: SampleInput, step: float | int = 1) -> None:
        """Validate integrality and unit spacing."""
        if step != 1:
            msg = f"Lattice paths live on the unit grid, got step {step}."
            raise DomainError(msg)
        super().__init__(samples, 1)

    def _validate(self) -> None:
        if not self.is_integer:
            msg = "Lattice paths carry integer samples."
            raise DomainError(msg)
