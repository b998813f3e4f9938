"""Random and exhaustive sources of excursions."""

from levytree.generators.enumeration import (
    MAX_DYCK_HALF_LENGTH,
    catalan,
    enumerate_dyck,
    enumerate_plane_trees,
    srw_excursion_tree_weight,
)
from levytree.generators.excursions import (
    brownian_excursion,
    calibrate_height_constant,
    model_excursion,
    normalized_stable_excursion,
    offspring_for,
    rescale_stable,
)
from levytree.generators.models import LevyModel
from levytree.generators.offspring import (
    OffspringDistribution,
    offspring_geometric,
    offspring_stable,
)
from levytree.generators.trees import (
    PlaneTree,
    contour_of_tree,
    gw_tree_conditioned,
    lukasiewicz_rotation,
    read_trees,
    tree_of_contour,
    write_trees,
)
from levytree.generators.walks import (
    WalkPath,
    height_of_walk,
    srw_walk,
    walk_until_hit,
)

__all__ = [
    "MAX_DYCK_HALF_LENGTH",
    "LevyModel",
    "OffspringDistribution",
    "PlaneTree",
    "WalkPath",
    "brownian_excursion",
    "calibrate_height_constant",
    "catalan",
    "contour_of_tree",
    "enumerate_dyck",
    "enumerate_plane_trees",
    "gw_tree_conditioned",
    "height_of_walk",
    "lukasiewicz_rotation",
    "model_excursion",
    "normalized_stable_excursion",
    "offspring_for",
    "offspring_geometric",
    "offspring_stable",
    "read_trees",
    "rescale_stable",
    "srw_excursion_tree_weight",
    "srw_walk",
    "tree_of_contour",
    "walk_until_hit",
    "write_trees",
]
