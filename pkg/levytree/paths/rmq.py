"""Sparse-table range-minimum queries over path samples."""

import numpy as np
import numpy.typing as npt
from beartype import beartype

from levytree.errors import DomainError
from levytree.types import SampleArray


@beartype
class SparseTable:
    """O(1) range minima over a fixed sample array after O(n log n) setup.

    Level ``j`` holds the minima of all windows of length ``2**j``. Queries are
    on inclusive index ranges and return exactly the sample minimum, so the
    table is interchangeable with a direct scan.
    """

    def __init__(self, samples: SampleArray) -> None:
        """Build all levels."""
        levels: list[SampleArray] = [samples]
        width = 1
        while 2 * width <= samples.size:
            previous = levels[-1]
            levels.append(np.minimum(previous[:-width], previous[width:]))
            width *= 2
        self._levels: list[SampleArray] = levels
        self.size: int = int(samples.size)

    def query(self, i: int, j: int) -> int | float:
        """Return min(samples[i..j]) for 0 <= i <= j < size."""
        if not 0 <= i <= j < self.size:
            msg = f"Invalid index range [{i}, {j}] for {self.size} samples."
            raise DomainError(msg)
        level = (j - i + 1).bit_length() - 1
        row = self._levels[level]
        return min(row[i], row[j - (1 << level) + 1]).item()

    def query_many(
        self,
        i: npt.NDArray[np.int64],
        j: npt.NDArray[np.int64],
    ) -> SampleArray:
        """Vectorized :meth:`query` over index arrays of equal shape."""
        if np.any(i > j) or np.any(i < 0) or np.any(j >= self.size):
            msg = "Invalid index ranges in vectorized range-minimum query."
            raise DomainError(msg)
        span = j - i + 1
        level = np.floor(np.log2(span)).astype(np.int64)
        # guard against floating log2 at exact powers of two
        level = np.where((1 << (level + 1)) <= span, level + 1, level)
        level = np.where((1 << level) > span, level - 1, level)
        out = np.empty(i.shape, dtype=self._levels[0].dtype)
        for lv in np.unique(level):
            mask = level == lv
            row = self._levels[int(lv)]
            out[mask] = np.minimum(row[i[mask]], row[j[mask] - (1 << int(lv)) + 1])
        return out
