"""Skip-free random walks and their discrete height processes."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from beartype import beartype

from levytree.errors import DomainError, InputError, StepBudgetExceeded
from levytree.paths import FinitePath, LatticePath
from levytree.types import IntArray, SampleInput

logger: logging.Logger = logging.getLogger("levytree")

FIRST_CHUNK = 1024


@beartype
@dataclass(frozen=True, eq=False, init=False)
class WalkPath:
    """A walk X_0 = 0, X_1, ..., X_T in units of ``delta``, skip-free downward.

    Attributes:
        values: Integer walk values in units; X_{t+1} - X_t >= -1.
        delta: The length of one unit.

    """

    values: IntArray
    delta: int | float | Fraction = 1

    def __init__(self, values: SampleInput, delta: int | float | Fraction = 1) -> None:
        """Validate the walk."""
        array = np.asarray(values)
        if array.ndim != 1 or array.size < 1:
            msg = "A walk needs a one-dimensional, nonempty value array."
            raise DomainError(msg)
        if not np.issubdtype(array.dtype, np.integer):
            msg = "Walk values are integers in units of delta."
            raise DomainError(msg)
        array = array.astype(np.int64)
        if array[0] != 0:
            msg = "A walk starts at 0."
            raise DomainError(msg)
        if np.any(np.diff(array) < -1):
            msg = "A walk may not jump down by more than one unit."
            raise DomainError(msg)
        if not delta > 0:
            msg = f"The unit delta must be positive, got {delta}."
            raise DomainError(msg)
        array.setflags(write=False)
        object.__setattr__(self, "values", array)
        object.__setattr__(self, "delta", delta)

    @property
    def length(self) -> int:
        """The number of steps T."""
        return int(self.values.size - 1)

    @cached_property
    def running_min(self) -> IntArray:
        """I_t = min(X_0, ..., X_t)."""
        return np.minimum.accumulate(self.values)

    def minimum_between(self, s: int, t: int) -> int:
        """Return I^s_t = min(X_s, ..., X_t)."""
        if not 0 <= s <= t <= self.length:
            msg = f"Invalid index range [{s}, {t}] for a walk of {self.length} steps."
            raise DomainError(msg)
        return int(self.values[s : t + 1].min())

    def hitting_time(self, level: int) -> int | None:
        """First t with X_t = -level, or None when the walk never gets there."""
        hits = np.flatnonzero(self.values == -level)
        return int(hits[0]) if hits.size else None

    def truncated_at_hit(self, level: int) -> "WalkPath":
        """Return the walk stopped at its first hitting time of ``-level``.

        Raises:
            InputError: The walk never reaches ``-level``.

        """
        hit = self.hitting_time(level)
        if hit is None:
            msg = f"The walk never reaches -{level} units."
            raise InputError(msg)
        return WalkPath(self.values[: hit + 1], self.delta)

    def as_path(self) -> FinitePath:
        """The walk as a path with unit time steps, values scaled by delta."""
        if self.delta == 1:
            return LatticePath(self.values)
        return FinitePath(self.values * float(self.delta), 1)


@beartype
def height_of_walk(walk: WalkPath) -> LatticePath:
    """Return H_t = #{s < t : X_s <= min(X_{s+1}, ..., X_t)}.

    The indices counted at time t form a stack whose values are nondecreasing
    from the bottom, so each step pushes t and pops the entries above X_{t+1}.
    For the Łukasiewicz walk of a plane tree, H_t is the depth of the t-th
    vertex in preorder.
    """
    x = walk.values.tolist()
    heights = [0] * len(x)
    stack: list[int] = []
    for t in range(len(x) - 1):
        stack.append(x[t])
        following = x[t + 1]
        while stack and stack[-1] > following:
            stack.pop()
        heights[t + 1] = len(stack)
    return LatticePath(heights)


@beartype
def srw_walk(
    n_steps: int,
    rng: np.random.Generator,
    delta: int | float | Fraction = 1,
) -> WalkPath:
    """Return a fair ±1 walk of ``n_steps`` steps."""
    if n_steps < 0:
        msg = f"The number of steps must be nonnegative, got {n_steps}."
        raise DomainError(msg)
    steps = 2 * rng.integers(0, 2, size=n_steps, dtype=np.int64) - 1
    return WalkPath(np.concatenate([[0], np.cumsum(steps)]), delta)


@beartype
def walk_until_hit(
    level: int,
    rng: np.random.Generator,
    delta: int | float | Fraction = 1,
    budget: int = 10**7,
) -> WalkPath:
    """Run a fair ±1 walk until it first hits ``-level``.

    Steps are drawn in chunks of doubling size, so the cost is proportional to
    the hitting time.

    Raises:
        StepBudgetExceeded: The walk did not hit within ``budget`` steps.

    """
    if level < 0:
        msg = f"The target level must be nonnegative, got {level}."
        raise DomainError(msg)
    pieces: list[IntArray] = [np.zeros(1, dtype=np.int64)]
    position = 0
    drawn = 0
    chunk = max(FIRST_CHUNK, 4 * level * level)
    while drawn < budget and position != -level:
        size = min(chunk, budget - drawn)
        steps = 2 * rng.integers(0, 2, size=size, dtype=np.int64) - 1
        values = position + np.cumsum(steps)
        hits = np.flatnonzero(values == -level)
        if hits.size:
            values = values[: hits[0] + 1]
        pieces.append(values)
        position = int(values[-1])
        drawn += size
        chunk *= 2
    if position != -level:
        msg = f"No hit of -{level} within {budget} steps."
        raise StepBudgetExceeded(msg, attempts=1)
    return WalkPath(np.concatenate(pieces), delta)
