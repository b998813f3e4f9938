"""Deterministic transforms of finite paths and contour excursions.

All functions are pure. Integer-valued paths stay integer-valued, so identities
on lattice paths hold in exact arithmetic.
"""

import math
from typing import TypeVar

import numpy as np
from beartype import beartype

from levytree.errors import DomainError
from levytree.paths.finite_path import ContourExcursion, FinitePath
from levytree.paths.rmq import SparseTable
from levytree.types import Time

P = TypeVar("P", bound=FinitePath)


@beartype
def eval_path(w: FinitePath, t: Time) -> int | float:
    """Evaluate ``w`` at time ``t`` by linear interpolation of the samples.

    Raises:
        DomainError: ``t`` lies outside [0, ζ].

    """
    w.check_time(t)
    position = float(t) / w.step
    if position.is_integer():
        return w.samples[int(position)].item()
    left = min(math.floor(position), w.size - 1)
    fraction = position - left
    a, b = w.samples[left].item(), w.samples[left + 1].item()
    return a + fraction * (b - a)


@beartype
def range_min(
    w: FinitePath,
    a: Time,
    b: Time,
    table: SparseTable | None = None,
) -> int | float:
    """Return the minimum of ``w`` over [a, b].

    The minimum is taken over the grid points strictly inside the interval and
    the interpolated values at both endpoints. ``table`` is an optional sparse
    table built on ``w.samples`` for repeated queries.
    """
    if a > b:
        msg = f"Empty interval [{a}, {b}]."
        raise DomainError(msg)
    w.check_time(a)
    w.check_time(b)
    best = min(eval_path(w, a), eval_path(w, b))
    first = math.ceil(float(a) / w.step)
    last = min(math.floor(float(b) / w.step), w.size)
    if first <= last:
        if table is not None:
            inner = table.query(first, last)
        else:
            inner = w.samples[first : last + 1].min().item()
        best = min(best, inner)
    return best


@beartype
def tree_distance(
    h: FinitePath,
    s: Time,
    t: Time,
    table: SparseTable | None = None,
) -> int | float:
    """Return d_H(s, t) = H(s) + H(t) - 2 min_{[s ∧ t, s ∨ t]} H."""
    low, high = (s, t) if s <= t else (t, s)
    return eval_path(h, s) + eval_path(h, t) - 2 * range_min(h, low, high, table)


def shift_time(sigma: Time, s: Time, t: Time) -> Time:
    """Return s ⊕ t, the time of the re-rooted path's time ``t`` in the original.

    Matches the two cases of the re-rooting formula: s + t while t < σ - s,
    and s + t - σ afterwards.
    """
    if t < sigma - s:
        return s + t
    return s + t - sigma


@beartype
def reroot(h: ContourExcursion, s: Time) -> ContourExcursion:
    """Return H^[s], the contour of the tree re-rooted at the vertex visited at s.

    H^[s](t) = d_H(s, s + t) for t < σ - s and d_H(s, s + t - σ) afterwards.

    Raises:
        DomainError: ``s`` lies outside [0, σ].
        PrecisionError: ``s`` is not a grid point.

    """
    k = h.grid_index(s)
    if h.size == 0:
        return h
    x = h.samples
    hk = x[k]
    forward = x[k:]
    ahead = hk + forward - 2 * np.minimum.accumulate(forward)
    behind = x[: k + 1]
    # min(x[u..k]) for u = 0..k
    behind_min = np.minimum.accumulate(behind[::-1])[::-1]
    wrapped = hk + behind - 2 * behind_min
    return ContourExcursion(np.concatenate([ahead, wrapped[1:]]), h.step)


@beartype
def reverse(w: P) -> P:
    """Return the time reversal t -> w(ζ - t), of the same kind as ``w``."""
    return w.with_samples(w.samples[::-1].copy())


@beartype
def tilde(w: FinitePath) -> FinitePath:
    """Return t -> w(0) + w(t) - 2 min_{[0, t]} w, evaluated on the grid."""
    x = w.samples
    return FinitePath(x[0] + x - 2 * np.minimum.accumulate(x), w.step)


@beartype
def split(h: ContourExcursion, s: Time) -> tuple[FinitePath, FinitePath]:
    """Return (H^{+,s}, H^{-,s}): the path after s and the reversed path before s."""
    k = h.grid_index(s)
    ahead = FinitePath(h.samples[k:].copy(), h.step)
    behind = FinitePath(h.samples[: k + 1][::-1].copy(), h.step)
    return ahead, behind


@beartype
def is_dyck(p: FinitePath) -> bool:
    """Whether ``p`` is an integer ±1 path, nonnegative, starting and ending at 0."""
    if p.step != 1 or not p.is_integer:
        return False
    x = p.samples
    if x[0] != 0 or x[-1] != 0 or np.any(x < 0):
        return False
    return bool(np.all(np.abs(np.diff(x)) == 1))


@beartype
def split_identity_holds(h: ContourExcursion, s: Time, atol: float = 0.0) -> bool:
    """Check that tilde(H^{+,s}) and tilde(H^{-,s}) read off the two halves of H^[s].

    tilde(H^{+,s})(t) = H^[s](t) on [0, σ - s] and
    tilde(H^{-,s})(t) = H^[s](σ - t) on [0, s].
    """
    k = h.grid_index(s)
    ahead, behind = split(h, s)
    rerooted = reroot(h, s).samples
    first = rerooted[: h.size - k + 1]
    second = rerooted[h.size - k :][::-1]
    pairs = ((tilde(ahead).samples, first), (tilde(behind).samples, second))
    if atol == 0:
        return all(np.array_equal(a, b) for a, b in pairs)
    return all(np.allclose(a, b, rtol=0.0, atol=atol) for a, b in pairs)


@beartype
def path_distance(w: FinitePath, v: FinitePath) -> float:
    """Return sup_t |w(t ∧ ζ) - v(t ∧ ζ')| + |ζ - ζ'|.

    Both paths are piecewise linear, so the supremum is attained on the union
    of their grids.
    """
    horizon = max(w.lifetime, v.lifetime)
    times = np.union1d(w.times, v.times)
    times = times[times <= horizon]
    a = np.interp(np.minimum(times, w.lifetime), w.times, w.samples)
    b = np.interp(np.minimum(times, v.lifetime), v.times, v.samples)
    return float(np.max(np.abs(a - b))) + abs(float(w.lifetime - v.lifetime))
