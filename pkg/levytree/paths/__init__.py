"""Finite paths, contour excursions and their deterministic transforms."""

from levytree.paths.finite_path import ContourExcursion, FinitePath, LatticePath
from levytree.paths.io import read_path, write_path
from levytree.paths.rmq import SparseTable
from levytree.paths.transforms import (
    eval_path,
    is_dyck,
    path_distance,
    range_min,
    reroot,
    reverse,
    shift_time,
    split,
    split_identity_holds,
    tilde,
    tree_distance,
)

__all__ = [
    "ContourExcursion",
    "FinitePath",
    "LatticePath",
    "SparseTable",
    "eval_path",
    "is_dyck",
    "path_distance",
    "range_min",
    "read_path",
    "reroot",
    "reverse",
    "shift_time",
    "split",
    "split_identity_holds",
    "tilde",
    "tree_distance",
    "write_path",
]
