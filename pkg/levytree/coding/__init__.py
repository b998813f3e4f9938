"""The real tree coded by an excursion."""

from levytree.coding.distances import (
    DistanceMatrix,
    distance_matrix,
    equivalent,
    isometry_check,
    triplet,
)
from levytree.coding.mass import mass_sample, mass_sample_indices, uniform_reroot
from levytree.coding.spanned import SpannedTree, SpannedTreeSchema, spanned_subtree

__all__ = [
    "DistanceMatrix",
    "SpannedTree",
    "SpannedTreeSchema",
    "distance_matrix",
    "equivalent",
    "isometry_check",
    "mass_sample",
    "mass_sample_indices",
    "spanned_subtree",
    "triplet",
    "uniform_reroot",
]
