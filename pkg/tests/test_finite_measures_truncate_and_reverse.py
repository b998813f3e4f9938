"""Test finite measures: masses, quantiles, truncation k_r, reversal and JSON."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from levytree.errors import DomainError, InputError, PathFormatError
from levytree.spine import (
    Atom,
    DriftSegment,
    FiniteMeasure,
    bismut_pair_is_reversal_invariant,
    brownian_bismut_pair,
    elementary_fact_check,
    reverse_measure,
    sup_support,
    total_mass,
    truncate,
    truncation_is_monotone,
)
from tests.strategies import lattice_measures

HALF = Fraction(1, 2)


def test_mass_and_support(drift_and_atom: FiniteMeasure) -> None:
    """Test |μ| = 5 and S(μ) = 2."""
    assert total_mass(drift_and_atom) == 5
    assert sup_support(drift_and_atom) == 2
    assert total_mass(FiniteMeasure.zero()) == 0
    assert sup_support(FiniteMeasure.zero()) == 0


def test_cdf_with_an_atom(drift_and_atom: FiniteMeasure) -> None:
    """Test F(x) and F(x-) on both sides of the atom."""
    assert drift_and_atom.cdf(Fraction(1, 4)) == Fraction(1, 4)
    assert drift_and_atom.cdf(HALF) == Fraction(7, 2)
    assert drift_and_atom.cdf_before(HALF) == HALF
    assert drift_and_atom.cdf(2) == 5


@pytest.mark.parametrize(
    ("level", "expected"),
    [(0, 0), (Fraction(1, 4), Fraction(1, 4)), (2, HALF), (Fraction(7, 2), HALF), (5, 2)],
)
def test_quantile(drift_and_atom: FiniteMeasure, level: Fraction, expected: Fraction) -> None:
    """Test inf{x : F(x) >= level} across the drift and the atom."""
    assert drift_and_atom.quantile(level) == expected


def test_quantile_above_the_total_mass(drift_and_atom: FiniteMeasure) -> None:
    """Test that levels above |μ| are rejected."""
    with pytest.raises(DomainError):
        drift_and_atom.quantile(6)


@pytest.mark.parametrize(
    ("r", "expected"),
    [
        (0, FiniteMeasure(drift=(DriftSegment(0, 2, 1),), atoms=(Atom(HALF, 3),))),
        (1, FiniteMeasure(drift=(DriftSegment(0, 1, 1),), atoms=(Atom(HALF, 3),))),
        (2, FiniteMeasure(drift=(DriftSegment(0, HALF, 1),), atoms=(Atom(HALF, Fraction(5, 2)),))),
        (5, FiniteMeasure.zero()),
    ],
)
def test_truncate(drift_and_atom: FiniteMeasure, r: int, expected: FiniteMeasure) -> None:
    """Test k_r μ, including an atom split by the cap."""
    truncated = truncate(drift_and_atom, r)
    assert truncated == expected
    assert truncated.total_mass == 5 - r


def test_truncate_outside_the_mass(drift_and_atom: FiniteMeasure) -> None:
    """Test that r outside [0, |μ|] is rejected."""
    with pytest.raises(DomainError):
        drift_and_atom.truncate(6)
    with pytest.raises(DomainError):
        drift_and_atom.truncate(-1)


def test_reverse_moves_the_atom(drift_and_atom: FiniteMeasure) -> None:
    """Test μ̄ for the drift on [0, 2] with the atom at 1/2."""
    mirrored = reverse_measure(drift_and_atom)
    assert mirrored == FiniteMeasure(
        drift=(DriftSegment(0, 2, 1),),
        atoms=(Atom(Fraction(3, 2), 3),),
    )
    assert mirrored.reversed() == drift_and_atom


def test_reverse_of_pieces_keeps_the_order() -> None:
    """Test that reversed drift segments stay contiguous from 0."""
    mu = FiniteMeasure(drift=(DriftSegment(0, 1, 2), DriftSegment(1, 3, 1)))
    assert mu.reversed().drift == (DriftSegment(0, 2, 1), DriftSegment(2, 3, 2))


def test_elementary_fact_on_the_example(drift_and_atom: FiniteMeasure) -> None:
    """Test S(μ) - S(k_{|μ| - 1} μ) = S(k_1 μ̄) = 3/2."""
    assert elementary_fact_check(drift_and_atom, 1, atol=0.0)
    assert drift_and_atom.reversed().truncate(1).support_max == Fraction(3, 2)


@given(lattice_measures(), st.fractions(min_value=0, max_value=1))
def test_elementary_fact(mu: FiniteMeasure, share: Fraction) -> None:
    """Test the elementary fact exactly for every r in [0, |μ|]."""
    assert elementary_fact_check(mu, share * mu.total_mass, atol=0.0)


@given(
    lattice_measures(),
    st.fractions(min_value=0, max_value=1),
    st.fractions(min_value=0, max_value=1),
)
def test_truncation_is_monotone(mu: FiniteMeasure, first: Fraction, second: Fraction) -> None:
    """Test that removing more mass lowers the CDF everywhere."""
    points = [Fraction(k, 4) for k in range(int(4 * mu.support_max) + 1)]
    assert truncation_is_monotone(mu, first * mu.total_mass, second * mu.total_mass, points)


def test_elementary_fact_needs_r_in_range(drift_and_atom: FiniteMeasure) -> None:
    """Test that r > |μ| is rejected."""
    with pytest.raises(DomainError):
        elementary_fact_check(drift_and_atom, 6)


def test_atoms_sharing_a_position_are_merged() -> None:
    """Test that atoms are sorted and merged."""
    mu = FiniteMeasure(
        drift=(DriftSegment(0, 1, 1),),
        atoms=(Atom(1, 1), Atom(HALF, 1), Atom(1, 2)),
    )
    assert mu.atoms == (Atom(HALF, 1), Atom(1, 3))


@pytest.mark.parametrize(
    ("drift", "atoms"),
    [
        ((DriftSegment(1, 2, 1),), ()),
        ((DriftSegment(0, 1, 1), DriftSegment(2, 3, 1)), ()),
        ((DriftSegment(0, 1, 0),), ()),
        ((DriftSegment(0, 1, 1),), (Atom(2, 1),)),
        ((DriftSegment(0, 1, 1),), (Atom(HALF, 0),)),
    ],
)
def test_invalid_measures(drift: tuple[DriftSegment, ...], atoms: tuple[Atom, ...]) -> None:
    """Test gaps, a late start, zero rates and misplaced or empty atoms."""
    with pytest.raises(DomainError):
        FiniteMeasure(drift=drift, atoms=atoms)


def test_lebesgue() -> None:
    """Test Lebesgue measure on [0, a] and on the empty interval."""
    assert FiniteMeasure.lebesgue(2) == FiniteMeasure(drift=(DriftSegment(0, 2, 1),))
    assert FiniteMeasure.lebesgue(0) == FiniteMeasure.zero()
    with pytest.raises(DomainError):
        FiniteMeasure.lebesgue(-1)


def test_mass_units(drift_and_atom: FiniteMeasure) -> None:
    """Test |μ| / δ for exact and float units."""
    assert drift_and_atom.mass_units(Fraction(1, 4)) == 20
    assert drift_and_atom.mass_units(1) == 5
    assert FiniteMeasure.lebesgue(1.0).mass_units(0.1) == 10


@pytest.mark.parametrize("delta", [2, 0, Fraction(2, 3)])
def test_mass_units_need_a_divisor(drift_and_atom: FiniteMeasure, delta: Fraction) -> None:
    """Test that δ must be positive and divide |μ|."""
    with pytest.raises(InputError):
        drift_and_atom.mass_units(delta)


def test_measure_json_round_trip(drift_and_atom: FiniteMeasure) -> None:
    """Test the {S, drift, atoms} form."""
    text = drift_and_atom.to_json()
    assert '"from":0.0' in text
    assert FiniteMeasure.from_json(text) == drift_and_atom
    assert FiniteMeasure.from_json('{"S": 0}') == FiniteMeasure.zero()


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"S": 3, "drift": [{"from": 0, "to": 2, "rate": 1}]}',
        '{"S": 1, "drift": [{"from": 0, "to": 1, "rate": -1}]}',
        '{"drift": []}',
    ],
)
def test_malformed_measure_json(text: str) -> None:
    """Test invalid JSON, a wrong S, a negative rate and a missing S."""
    with pytest.raises(PathFormatError):
        FiniteMeasure.from_json(text)


def test_brownian_bismut_pair() -> None:
    """Test that ψ(λ) = λ² gives two Lebesgue measures fixed by reversal."""
    mu, nu = brownian_bismut_pair(2)
    assert mu == nu == FiniteMeasure.lebesgue(2)
    assert bismut_pair_is_reversal_invariant(Fraction(3, 2))
    with pytest.raises(DomainError):
        brownian_bismut_pair(0)
