"""Critical offspring distributions of Galton-Watson trees."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from beartype import beartype

from levytree.errors import DomainError
from levytree.types import FloatArray, IntArray

STABLE_TRUNCATION = 10**6
"""Largest child count represented by a stable offspring law."""

GEOMETRIC_TRUNCATION = 1100
"""Beyond this child count 2^(-k-1) underflows binary64."""


@beartype
@dataclass(frozen=True, eq=False)
class OffspringDistribution:
    """A law on child counts 0, 1, ..., k_max given by its probabilities.

    Attributes:
        name: Short description used in logs and reports.
        pmf: P(k) for k = 0..k_max, summing to one.

    """

    name: str
    pmf: FloatArray

    def __post_init__(self) -> None:
        """Validate the probabilities."""
        if self.pmf.ndim != 1 or self.pmf.size < 2:
            msg = "An offspring law needs probabilities for at least 0 and 1 children."
            raise DomainError(msg)
        if np.any(self.pmf < 0) or not np.isclose(self.pmf.sum(), 1.0, atol=1e-9):
            msg = f"{self.name}: probabilities must be nonnegative and sum to one."
            raise DomainError(msg)
        self.pmf.setflags(write=False)

    @property
    def support_max(self) -> int:
        """The largest representable child count."""
        return int(self.pmf.size - 1)

    @cached_property
    def cdf(self) -> FloatArray:
        """Cumulative probabilities, with the last entry forced to one."""
        cumulative = np.cumsum(self.pmf)
        cumulative[-1] = 1.0
        return cumulative

    @property
    def mean(self) -> float:
        """The mean child count."""
        return float(np.dot(np.arange(self.pmf.size), self.pmf))

    def probability(self, k: int) -> float:
        """Return P(k), zero beyond the support."""
        if k < 0 or k > self.support_max:
            return 0.0
        return float(self.pmf[k])

    def truncated(self, n: int) -> FloatArray:
        """Return P(0..n), padded with zeros beyond the support."""
        out = np.zeros(n + 1, dtype=np.float64)
        width = min(n + 1, self.pmf.size)
        out[:width] = self.pmf[:width]
        return out

    def sample(self, rng: np.random.Generator, size: int | tuple[int, ...]) -> IntArray:
        """Draw independent child counts by inverting the CDF."""
        draws = rng.random(size)
        return np.searchsorted(self.cdf, draws, side="right").astype(np.int64)


@beartype
def offspring_geometric() -> OffspringDistribution:
    """Return the geometric law P(k) = 2^(-k-1), critical and CRT-attracted."""
    pmf = 0.5 ** np.arange(1, GEOMETRIC_TRUNCATION + 2, dtype=np.float64)
    pmf[-1] += 1.0 - pmf.sum()
    return OffspringDistribution(name="geometric(1/2)", pmf=pmf)


@beartype
def stable_coefficients(gamma: float, k_max: int = STABLE_TRUNCATION) -> FloatArray:
    """Return the coefficients of s^k in (1 - s)^γ for k = 0..k_max.

    Uses c_0 = 1 and c_k = c_{k-1} (k - 1 - γ) / k.
    """
    k = np.arange(1, k_max + 1, dtype=np.float64)
    ratios = (k - 1.0 - gamma) / k
    return np.concatenate([[1.0], np.cumprod(ratios)])


@beartype
def offspring_stable(gamma: float, k_max: int = STABLE_TRUNCATION) -> OffspringDistribution:
    """Return the law with generating function φ(s) = s + (1 - s)^γ / γ.

    P(0) = 1/γ, P(1) = 0 and P(k) = c_k / γ for k >= 2, where c_k is the
    coefficient of s^k in (1 - s)^γ. The tail beyond ``k_max`` is lumped into
    the last bucket. The law has mean one and tail index γ; γ = 2 gives the
    binary law P(0) = P(2) = 1/2.

    Raises:
        DomainError: γ outside (1, 2].

    """
    if not 1.0 < gamma <= 2.0:
        msg = f"The stable offspring index must lie in (1, 2], got {gamma}."
        raise DomainError(msg)
    pmf = stable_coefficients(gamma, k_max) / gamma
    pmf[1] += 1.0
    # c_k vanishes identically for γ = 2 and k >= 3
    pmf = np.clip(pmf, 0.0, None)
    pmf[-1] += max(0.0, 1.0 - pmf.sum())
    return OffspringDistribution(name=f"stable({gamma})", pmf=pmf)
