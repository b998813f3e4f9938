"""Plane trees, their contours and conditioned Galton-Watson sampling."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from beartype import beartype
from scipy import signal

from levytree.errors import DomainError, PathFormatError, RejectionBudgetExceeded
from levytree.generators.offspring import OffspringDistribution
from levytree.generators.walks import WalkPath
from levytree.paths import LatticePath, is_dyck
from levytree.types import ConditioningMethod, FloatArray, IntArray

logger: logging.Logger = logging.getLogger("levytree")

REJECTION_BUDGET = 100_000
"""Default number of i.i.d. count vectors tried by the rejection sampler."""

SPLIT_THRESHOLD = 64
"""``method="auto"`` uses the split sampler above this many edges."""

_REJECTION_BATCH = 1 << 16


@beartype
@dataclass(frozen=True)
class PlaneTree:
    """A finite rooted ordered tree given by its child counts in preorder.

    The Łukasiewicz condition holds: partial sums of (count - 1) stay
    nonnegative until the last vertex, where they reach -1.
    """

    child_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check the Łukasiewicz condition."""
        counts = np.asarray(self.child_counts, dtype=np.int64)
        if counts.size == 0 or np.any(counts < 0):
            msg = "A plane tree needs nonnegative child counts for at least one vertex."
            raise DomainError(msg)
        partial = np.cumsum(counts - 1)
        if partial[-1] != -1 or np.any(partial[:-1] < 0):
            msg = f"{self.child_counts} violates the Łukasiewicz condition."
            raise DomainError(msg)

    @property
    def vertices(self) -> int:
        """Number of vertices."""
        return len(self.child_counts)

    @property
    def edges(self) -> int:
        """Number of edges."""
        return len(self.child_counts) - 1

    def lukasiewicz_walk(self) -> WalkPath:
        """Return X_0 = 0, X_k = sum over i < k of (count_i - 1), ending at -1."""
        steps = np.asarray(self.child_counts, dtype=np.int64) - 1
        return WalkPath(np.concatenate([[0], np.cumsum(steps)]))

    def depths(self) -> IntArray:
        """Depth of every vertex in preorder."""
        depths = np.zeros(self.vertices, dtype=np.int64)
        pending = [self.child_counts[0]] if self.child_counts[0] else []
        for vertex in range(1, self.vertices):
            depths[vertex] = len(pending)
            pending[-1] -= 1
            if not pending[-1]:
                pending.pop()
            if self.child_counts[vertex]:
                pending.append(self.child_counts[vertex])
        return depths

    def to_parentheses(self) -> str:
        """Return the balanced-parentheses word of the contour."""
        steps = np.diff(contour_of_tree(self).samples)
        return "".join("(" if step > 0 else ")" for step in steps.tolist())

    @classmethod
    def from_parentheses(cls, word: str) -> "PlaneTree":
        """Parse a balanced-parentheses word.

        Raises:
            PathFormatError: The word is not balanced.

        """
        if set(word) - {"(", ")"}:
            msg = f"Unexpected characters in tree word {word!r}."
            raise PathFormatError(msg)
        steps = np.array([1 if char == "(" else -1 for char in word], dtype=np.int64)
        contour = LatticePath(np.concatenate([[0], np.cumsum(steps)]))
        if not is_dyck(contour):
            msg = f"Tree word {word!r} is not balanced."
            raise PathFormatError(msg)
        return tree_of_contour(contour)


@beartype
def contour_of_tree(tree: PlaneTree) -> LatticePath:
    """Return the depth-first contour of ``tree``, a Dyck path of length 2n.

    Before the up-step to preorder vertex i the contour walks down from the
    depth of vertex i - 1 to the depth of the parent of i.
    """
    depths = tree.depths()
    n = tree.edges
    if n == 0:
        return LatticePath([0])
    downs = depths[:-1] - depths[1:] + 1
    ups = np.cumsum(downs) + np.arange(n)
    steps = -np.ones(2 * n, dtype=np.int64)
    steps[ups] = 1
    return LatticePath(np.concatenate([[0], np.cumsum(steps)]))


@beartype
def tree_of_contour(dyck: LatticePath) -> PlaneTree:
    """Return the plane tree whose contour is ``dyck``.

    Raises:
        DomainError: ``dyck`` is not a Dyck path.

    """
    if not is_dyck(dyck):
        msg = f"{dyck} is not a Dyck path."
        raise DomainError(msg)
    x = dyck.samples
    ups = np.flatnonzero(np.diff(x) > 0)
    depths = [0, *x[ups + 1].tolist()]
    counts = [0] * len(depths)
    ancestors = [0]
    for vertex in range(1, len(depths)):
        del ancestors[depths[vertex] :]
        counts[ancestors[-1]] += 1
        ancestors.append(vertex)
    return PlaneTree(tuple(counts))


@beartype
def lukasiewicz_rotation(steps: IntArray) -> int:
    """Return the unique rotation index turning ``steps`` into a Łukasiewicz walk.

    ``steps`` are values count - 1 summing to -1. By the cycle lemma, exactly
    one cyclic shift keeps every proper partial sum nonnegative: the one
    starting right after the first time the partial sums reach their minimum.
    """
    if steps.size == 0 or int(steps.sum()) != -1 or np.any(steps < -1):
        msg = "Rotation needs skip-free steps summing to -1."
        raise DomainError(msg)
    partial = np.cumsum(steps)
    return int(np.argmin(partial) + 1) % steps.size


def _rotate(counts: IntArray) -> PlaneTree:
    shift = lukasiewicz_rotation(counts - 1)
    return PlaneTree(tuple(np.roll(counts, -shift).tolist()))


def _sample_rejection(
    offspring: OffspringDistribution,
    n: int,
    rng: np.random.Generator,
    max_attempts: int,
) -> IntArray:
    rows = max(1, _REJECTION_BATCH // (n + 1))
    attempts = 0
    while attempts < max_attempts:
        batch = min(rows, max_attempts - attempts)
        counts = offspring.sample(rng, (batch, n + 1))
        accepted = np.flatnonzero(counts.sum(axis=1) == n)
        if accepted.size:
            return counts[accepted[0]]
        attempts += batch
    msg = f"No count vector of {n + 1} draws summed to {n} in {max_attempts} attempts."
    raise RejectionBudgetExceeded(msg, attempts=attempts)


def _convolution_powers(
    offspring: OffspringDistribution,
    n: int,
) -> dict[int, FloatArray]:
    """Return P(X_1 + ... + X_m = j), j = 0..n, for every block size m used."""
    powers: dict[int, FloatArray] = {1: offspring.truncated(n)}

    def power(m: int) -> FloatArray:
        if m not in powers:
            half = m // 2
            joined = signal.fftconvolve(power(half), power(m - half))[: n + 1]
            powers[m] = np.clip(joined, 0.0, None)
        return powers[m]

    power(n + 1)
    return powers


def _sample_split(
    offspring: OffspringDistribution,
    n: int,
    rng: np.random.Generator,
) -> IntArray:
    """Draw n + 1 i.i.d. counts conditioned on summing to n, exactly.

    Every block of m counts with sum S is cut into halves of sizes
    m1 = m // 2 and m - m1; the first half's sum j is drawn with weights
    P(X_1 + ... + X_m1 = j) P(X_1 + ... + X_{m - m1} = S - j). All blocks of one
    level are drawn together over a ragged array of candidate values.
    """
    powers = _convolution_powers(offspring, n)
    sizes_used = sorted(powers)
    row_of = {m: row for row, m in enumerate(sizes_used)}
    table = np.stack([powers[m] for m in sizes_used])

    sizes = np.array([n + 1], dtype=np.int64)
    sums = np.array([n], dtype=np.int64)
    while np.any(sizes > 1):
        active = np.flatnonzero(sizes > 1)
        block_sizes, block_sums = sizes[active], sums[active]
        first = block_sizes // 2
        rows_first = np.array([row_of[m] for m in first.tolist()], dtype=np.int64)
        rows_second = np.array(
            [row_of[m] for m in (block_sizes - first).tolist()],
            dtype=np.int64,
        )
        lengths = block_sums + 1
        offsets = np.cumsum(lengths) - lengths
        block = np.repeat(np.arange(active.size), lengths)
        j = np.arange(int(lengths.sum())) - offsets[block]
        weights = (
            table[rows_first[block], j]
            * table[rows_second[block], block_sums[block] - j]
        )
        totals = np.add.reduceat(weights, offsets)
        if not np.all(np.isfinite(totals)) or np.any(totals <= 0):
            msg = "Degenerate conditional weights in the split sampler."
            raise RejectionBudgetExceeded(msg, attempts=1)
        cumulative = np.cumsum(weights / totals[block])
        targets = np.arange(active.size) + rng.random(active.size)
        picks = np.searchsorted(cumulative, targets, side="left")
        picks = np.clip(picks, offsets, offsets + block_sums)
        chosen = picks - offsets

        children = np.ones(sizes.size, dtype=np.int64)
        children[active] = 2
        starts = np.cumsum(children) - children
        new_sizes = np.empty(int(children.sum()), dtype=np.int64)
        new_sums = np.empty_like(new_sizes)
        new_sizes[starts] = sizes
        new_sums[starts] = sums
        new_sizes[starts[active]] = first
        new_sums[starts[active]] = chosen
        new_sizes[starts[active] + 1] = block_sizes - first
        new_sums[starts[active] + 1] = block_sums - chosen
        sizes, sums = new_sizes, new_sums
    return sums


@beartype
def gw_tree_conditioned(
    offspring: OffspringDistribution,
    n: int,
    rng: np.random.Generator,
    method: ConditioningMethod = "auto",
    max_attempts: int = REJECTION_BUDGET,
) -> PlaneTree:
    """Sample a Galton-Watson tree conditioned to have exactly ``n`` edges.

    n + 1 i.i.d. child counts are drawn conditioned on summing to n, either by
    rejection or by the exact split sampler, and rotated into preorder by the
    cycle lemma.

    Raises:
        DomainError: ``n`` < 1.
        RejectionBudgetExceeded: The rejection sampler ran out of attempts.

    """
    if n < 1:
        msg = f"A conditioned tree needs at least one edge, got n={n}."
        raise DomainError(msg)
    if method == "auto":
        method = "split" if n > SPLIT_THRESHOLD else "rejection"
    if method == "rejection":
        counts = _sample_rejection(offspring, n, rng, max_attempts)
    else:
        counts = _sample_split(offspring, n, rng)
    return _rotate(counts)


@beartype
def write_trees(trees: Iterable[PlaneTree], destination: Path) -> None:
    """Write one balanced-parentheses word per line."""
    with destination.open("w") as handle:
        handle.writelines(f"{tree.to_parentheses()}\n" for tree in trees)


@beartype
def read_trees(source: Path) -> list[PlaneTree]:
    """Read the file written by :func:`write_trees`.

    An empty line is the single-vertex tree.
    """
    return [
        PlaneTree.from_parentheses(line.strip())
        for line in source.read_text().splitlines()
    ]
