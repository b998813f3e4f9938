"""Finite measures on [0, ∞) whose support is an interval [0, S(μ)].

Arithmetic is generic over ``numbers.Real``: measures built from ints and
``Fraction`` values stay exact under truncation and reversal.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import ClassVar

from beartype import beartype
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from levytree.errors import DomainError, InputError, PathFormatError

LATTICE_TOLERANCE = 1e-9
CHECK_TOLERANCE = 1e-12


@beartype
@dataclass(frozen=True)
class DriftSegment:
    """Density ``rate`` with respect to Lebesgue measure on [start, end]."""

    start: Real
    end: Real
    rate: Real

    @property
    def mass(self) -> Real:
        """The mass of the segment."""
        return self.rate * (self.end - self.start)


@beartype
@dataclass(frozen=True)
class Atom:
    """A point mass."""

    position: Real
    mass: Real


class DriftSchema(BaseModel):
    """JSON form of a drift segment."""

    model_config: ClassVar[ConfigDict] = {"populate_by_name": True, "frozen": True}

    start: float = Field(alias="from")
    end: float = Field(alias="to")
    rate: float = Field(gt=0)


class AtomSchema(BaseModel):
    """JSON form of an atom."""

    model_config: ClassVar[ConfigDict] = {"frozen": True}

    at: float = Field(ge=0)
    mass: float = Field(gt=0)


class MeasureSchema(BaseModel):
    """JSON form of a measure: ``{S, drift: [{from, to, rate}], atoms: [{at, mass}]}``."""

    S: float = Field(ge=0)
    drift: list[DriftSchema] = []
    atoms: list[AtomSchema] = []


@beartype
@dataclass(frozen=True)
class FiniteMeasure:
    """A finite measure μ with supp(μ) = [0, S(μ)].

    Attributes:
        drift: Contiguous segments covering [0, S(μ)] with positive rates.
        atoms: Point masses in [0, S(μ)], sorted by position, at most one per
            position.

    The zero measure has no segments and no atoms, and S = 0. A measure made of
    an atom at 0 only also has S = 0.
    """

    drift: tuple[DriftSegment, ...] = ()
    atoms: tuple[Atom, ...] = ()

    def __post_init__(self) -> None:
        """Validate the support and merge atoms sharing a position."""
        boundary: Real = 0
        for segment in self.drift:
            if segment.start != boundary or not segment.end > segment.start:
                msg = "Drift segments must be contiguous, start at 0 and have positive length."
                raise DomainError(msg)
            if not segment.rate > 0:
                msg = f"Drift rates must be positive, got {segment.rate}."
                raise DomainError(msg)
            boundary = segment.end
        merged: dict[Real, Real] = {}
        for atom in self.atoms:
            if not atom.mass > 0 or not 0 <= atom.position <= boundary:
                msg = f"Atom {atom} lies outside [0, {boundary}] or has no mass."
                raise DomainError(msg)
            merged[atom.position] = merged.get(atom.position, 0) + atom.mass
        atoms = tuple(Atom(position, mass) for position, mass in sorted(merged.items()))
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def zero(cls) -> "FiniteMeasure":
        """The zero measure."""
        return cls()

    @classmethod
    def lebesgue(cls, a: Real) -> "FiniteMeasure":
        """Lebesgue measure on [0, a]."""
        if a < 0:
            msg = f"Lebesgue measure needs a >= 0, got {a}."
            raise DomainError(msg)
        if a == 0:
            return cls()
        return cls(drift=(DriftSegment(0, a, 1),))

    @property
    def total_mass(self) -> Real:
        """|μ|."""
        return sum((s.mass for s in self.drift), start=0) + sum(
            (atom.mass for atom in self.atoms),
            start=0,
        )

    @property
    def support_max(self) -> Real:
        """S(μ), zero for the zero measure."""
        return self.drift[-1].end if self.drift else 0

    def _drift_below(self, x: Real) -> Real:
        total: Real = 0
        for segment in self.drift:
            if x <= segment.start:
                break
            total += segment.rate * (min(x, segment.end) - segment.start)
        return total

    def cdf(self, x: Real) -> Real:
        """F(x) = μ([0, x])."""
        atoms = sum((atom.mass for atom in self.atoms if atom.position <= x), start=0)
        return self._drift_below(x) + atoms

    def cdf_before(self, x: Real) -> Real:
        """F(x-) = μ([0, x))."""
        atoms = sum((atom.mass for atom in self.atoms if atom.position < x), start=0)
        return self._drift_below(x) + atoms

    def quantile(self, level: Real) -> Real:
        """Return inf{x >= 0 : F(x) >= level}.

        Raises:
            DomainError: ``level`` exceeds the total mass.

        """
        if level <= 0:
            return 0
        if level > self.total_mass:
            msg = f"Level {level} exceeds the total mass {self.total_mass}."
            raise DomainError(msg)
        points = sorted(
            {0, self.support_max}
            | {atom.position for atom in self.atoms}
            | {segment.start for segment in self.drift},
        )
        jumps = {atom.position: atom.mass for atom in self.atoms}
        cumulative: Real = 0
        for here, following in zip(points, [*points[1:], None], strict=True):
            cumulative += jumps.get(here, 0)
            if cumulative >= level:
                return here
            if following is None:
                break
            rate = self._rate_at(here)
            mass = rate * (following - here)
            if cumulative + mass >= level:
                return here + (level - cumulative) / rate
            cumulative += mass
        # rounding of float masses can leave the top level unreached
        return self.support_max

    def _rate_at(self, x: Real) -> Real:
        for segment in self.drift:
            if segment.start <= x < segment.end:
                return segment.rate
        msg = f"No drift segment contains {x}."
        raise DomainError(msg)

    def truncate(self, r: Real) -> "FiniteMeasure":
        """Return k_r μ, the element of M_f* with CDF F ∧ (|μ| - r).

        An atom straddling the cap is split by mass.

        Raises:
            DomainError: ``r`` outside [0, |μ|].

        """
        total = self.total_mass
        if r < 0 or r > total:
            msg = f"Cannot remove mass {r} from a measure of mass {total}."
            raise DomainError(msg)
        if r == 0:
            return self
        cap = total - r
        if cap <= 0:
            return FiniteMeasure()
        top = self.quantile(cap)
        drift = tuple(
            DriftSegment(segment.start, min(segment.end, top), segment.rate)
            for segment in self.drift
            if segment.start < top
        )
        atoms = [atom for atom in self.atoms if atom.position < top]
        straddling = next((a for a in self.atoms if a.position == top), None)
        if straddling is not None:
            remainder = min(straddling.mass, cap - self.cdf_before(top))
            if remainder > 0:
                atoms.append(Atom(top, remainder))
        return FiniteMeasure(drift=drift, atoms=tuple(atoms))

    def reversed(self) -> "FiniteMeasure":
        """Return μ̄, the image of μ under x -> S(μ) - x."""
        top = self.support_max
        drift = tuple(
            DriftSegment(top - segment.end, top - segment.start, segment.rate)
            for segment in reversed(self.drift)
        )
        atoms = tuple(Atom(top - atom.position, atom.mass) for atom in self.atoms)
        return FiniteMeasure(drift=drift, atoms=atoms)

    def mass_units(self, delta: Real) -> int:
        """Return |μ| / δ.

        Raises:
            InputError: |μ| is not a multiple of δ.

        """
        if not delta > 0:
            msg = f"The mass unit must be positive, got {delta}."
            raise InputError(msg)
        ratio = self.total_mass / delta
        if isinstance(ratio, int | Fraction):
            if Fraction(ratio).denominator == 1:
                return int(ratio)
        elif math.isclose(ratio, round(ratio), rel_tol=0.0, abs_tol=LATTICE_TOLERANCE):
            return round(ratio)
        msg = f"The total mass {self.total_mass} is not a multiple of {delta}."
        raise InputError(msg)

    def to_schema(self) -> MeasureSchema:
        """Return the JSON schema object."""
        return MeasureSchema(
            S=float(self.support_max),
            drift=[
                DriftSchema(start=float(s.start), end=float(s.end), rate=float(s.rate))
                for s in self.drift
            ],
            atoms=[AtomSchema(at=float(a.position), mass=float(a.mass)) for a in self.atoms],
        )

    def to_json(self) -> str:
        """Serialize to JSON."""
        return self.to_schema().model_dump_json(by_alias=True)

    @classmethod
    def from_json(cls, text: str) -> "FiniteMeasure":
        """Parse the JSON produced by :meth:`to_json`.

        Raises:
            PathFormatError: Malformed JSON, or S disagrees with the drift.

        """
        try:
            schema = MeasureSchema.model_validate(json.loads(text))
        except (ValidationError, json.JSONDecodeError) as exc:
            msg = f"Invalid measure JSON: {exc}"
            raise PathFormatError(msg) from exc
        measure = cls(
            drift=tuple(DriftSegment(d.start, d.end, d.rate) for d in schema.drift),
            atoms=tuple(Atom(a.at, a.mass) for a in schema.atoms),
        )
        if measure.support_max != schema.S:
            msg = f"S = {schema.S} disagrees with the drift segments."
            raise PathFormatError(msg)
        return measure


@beartype
def total_mass(mu: FiniteMeasure) -> Real:
    """Return |μ|."""
    return mu.total_mass


@beartype
def sup_support(mu: FiniteMeasure) -> Real:
    """Return S(μ)."""
    return mu.support_max


@beartype
def truncate(mu: FiniteMeasure, r: Real) -> FiniteMeasure:
    """Return k_r μ."""
    return mu.truncate(r)


@beartype
def reverse_measure(mu: FiniteMeasure) -> FiniteMeasure:
    """Return μ̄."""
    return mu.reversed()


@beartype
def elementary_fact_check(
    mu: FiniteMeasure,
    r: Real,
    atol: float = CHECK_TOLERANCE,
) -> bool:
    """Check S(μ) - S(k_{|μ| - r} μ) = S(k_r μ̄)."""
    if r < 0 or r > mu.total_mass:
        msg = f"r must lie in [0, |μ|], got {r}."
        raise DomainError(msg)
    left = mu.support_max - mu.truncate(mu.total_mass - r).support_max
    right = mu.reversed().truncate(r).support_max
    return abs(left - right) <= atol


@beartype
def truncation_is_monotone(
    mu: FiniteMeasure,
    r: Real,
    r_prime: Real,
    points: list[Real],
) -> bool:
    """For r <= r', check that k_{r'} μ has the smaller CDF at every point."""
    low, high = (r, r_prime) if r <= r_prime else (r_prime, r)
    lighter, heavier = mu.truncate(high), mu.truncate(low)
    return all(lighter.cdf(x) <= heavier.cdf(x) for x in points)


@beartype
def brownian_bismut_pair(a: Real) -> tuple[FiniteMeasure, FiniteMeasure]:
    """Return the pair (μ, ν) for ψ(λ) = λ²: both Lebesgue measure on [0, a].

    The two-dimensional subordinator has Laplace exponent λ + λ', so both
    coordinates are the deterministic drift U_t = t.
    """
    if not a > 0:
        msg = f"The spine height must be positive, got {a}."
        raise DomainError(msg)
    return FiniteMeasure.lebesgue(a), FiniteMeasure.lebesgue(a)


@beartype
def bismut_pair_is_reversal_invariant(a: Real) -> bool:
    """Check that (μ, ν) is symmetric and fixed by (μ, ν) -> (μ̄, ν̄)."""
    mu, nu = brownian_bismut_pair(a)
    return mu == nu and (mu.reversed(), nu.reversed()) == (mu, nu)
