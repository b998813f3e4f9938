"""Re-rooting and spine calculus of Lévy trees."""

from levytree.config import McConfig  # hoisting/bubbling up
from levytree.generators import LevyModel
from levytree.paths import ContourExcursion, FinitePath, LatticePath, reroot, reverse
from levytree.spine import FiniteMeasure

__version__ = "0.1.0"

__all__ = [
    "ContourExcursion",
    "FiniteMeasure",
    "FinitePath",
    "LatticePath",
    "LevyModel",
    "McConfig",
    "reroot",
    "reverse",
]
