"""Kolmogorov-Smirnov tests and Bonferroni accounting."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from beartype import beartype
from scipy import stats

from levytree.errors import InputError
from levytree.types import FloatArray, SampleInput


@beartype
@dataclass(frozen=True)
class KsResult:
    """A Kolmogorov-Smirnov statistic with its asymptotic p-value."""

    statistic: float
    p: float


def _sample(values: SampleInput, name: str) -> FloatArray:
    array: npt.NDArray[np.float64] = np.asarray(values, dtype=np.float64)
    if array.ndim != 1 or array.size == 0:
        msg = f"{name} must be a nonempty one-dimensional sample."
        raise InputError(msg)
    if not np.all(np.isfinite(array)):
        msg = f"{name} contains non-finite values."
        raise InputError(msg)
    return array


@beartype
def ks_two_sample(xs: SampleInput, ys: SampleInput) -> KsResult:
    """Two-sample KS statistic sup |F_xs - F_ys| with its asymptotic p-value.

    Raises:
        InputError: A sample is empty or not finite.

    """
    first, second = _sample(xs, "xs"), _sample(ys, "ys")
    result = stats.ks_2samp(first, second, method="asymp")
    return KsResult(statistic=float(result.statistic), p=float(result.pvalue))


@beartype
def ks_uniform(xs: SampleInput) -> KsResult:
    """One-sample KS test of ``xs`` against the uniform law on [0, 1]."""
    sample = _sample(xs, "xs")
    result = stats.kstest(sample, "uniform", method="asymp")
    return KsResult(statistic=float(result.statistic), p=float(result.pvalue))


@beartype
def bonferroni_threshold(alpha: float, m: int) -> float:
    """Per-test level α / m."""
    if m < 1:
        msg = f"Bonferroni needs at least one test, got m={m}."
        raise InputError(msg)
    return alpha / m


@beartype
def bonferroni(p_values: list[float], alpha: float) -> bool:
    """A family of m tests passes iff min p > α / m."""
    threshold = bonferroni_threshold(alpha, len(p_values))
    return min(p_values) > threshold


@beartype
def z_score(differences: SampleInput) -> float:
    """Mean of paired differences divided by its standard error."""
    sample = _sample(differences, "differences")
    error = sample.std(ddof=1) / np.sqrt(sample.size) if sample.size > 1 else 0.0
    mean = float(sample.mean())
    if error == 0:
        return 0.0 if mean == 0 else float("inf")
    return mean / float(error)


@beartype
def two_sided_normal_p(z: float) -> float:
    """P(|N(0, 1)| >= |z|)."""
    return float(2 * stats.norm.sf(abs(z)))
