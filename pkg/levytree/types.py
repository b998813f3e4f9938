"""Shared types for the levytree packages."""

from collections.abc import Sequence
from fractions import Fraction
from typing import Literal

import numpy as np
import numpy.typing as npt

type FloatArray = npt.NDArray[np.float64]
type IntArray = npt.NDArray[np.int64]
type SampleArray = npt.NDArray[np.float64] | npt.NDArray[np.int64]

type Time = float | int | Fraction
"""A time value. Grid times of lattice paths are integers."""

type Exact = int | Fraction
"""A value in exact arithmetic."""

type ParamValue = int | float | str | bool | None | list[int] | list[float] | list[str]
"""A report parameter value."""

type DictStrAny = dict[str, object]

type TestMode = Literal["exact", "statistical"]
type SpineScheme = Literal["records", "symmetric"]
type ConditioningMethod = Literal["auto", "rejection", "split"]
type FunctionalTag = Literal[
    "eval_at",
    "sup",
    "area",
    "triplet_component",
    "duration",
]

type SampleInput = (
    Sequence[int]
    | Sequence[float]
    | npt.NDArray[np.floating]
    | npt.NDArray[np.integer]
)
"""Anything a path can be built from."""
