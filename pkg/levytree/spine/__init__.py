"""Finite measures in M_f*, spine paths and the identities behind time reversal."""

from levytree.spine.measures import (
    Atom,
    DriftSegment,
    FiniteMeasure,
    MeasureSchema,
    bismut_pair_is_reversal_invariant,
    brownian_bismut_pair,
    elementary_fact_check,
    reverse_measure,
    sup_support,
    total_mass,
    truncate,
    truncation_is_monotone,
)
from levytree.spine.paths import SpinePath, key2_identities_hold, sample_Q, spine_path

__all__ = [
    "Atom",
    "DriftSegment",
    "FiniteMeasure",
    "MeasureSchema",
    "SpinePath",
    "bismut_pair_is_reversal_invariant",
    "brownian_bismut_pair",
    "elementary_fact_check",
    "key2_identities_hold",
    "reverse_measure",
    "sample_Q",
    "spine_path",
    "sup_support",
    "total_mass",
    "truncate",
    "truncation_is_monotone",
]
