"""Registry of the verification suites reachable from the command line."""

from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Literal

from beartype import beartype

from levytree.config import McConfig
from levytree.errors import ConfigError, InputError
from levytree.generators import LevyModel
from levytree.harness.exact import (
    verify_isometry,
    verify_key2_identities,
    verify_prop1_exact,
    verify_reroot_bijection,
    verify_split_identity,
    verify_time_reversal_exact,
)
from levytree.harness.functionals import FunctionalSpec
from levytree.harness.montecarlo import (
    KEY2_DELTA,
    default_key2_measure,
    verify_fixed_s_mc,
    verify_ise,
    verify_key2,
    verify_time_reversal,
    verify_triplet,
    verify_uniform_reroot_mc,
)
from levytree.harness.reports import TestReport
from levytree.spine import FiniteMeasure

type SuiteMode = Literal["exact", "mc"]


@beartype
@dataclass(frozen=True, kw_only=True)
class SuiteRequest:  # pylint: disable=too-many-instance-attributes
    """Everything a suite may read; each suite ignores what it does not need.

    n: int: Half-length of the enumerated Dyck paths.

    n_max: int: Largest edge count of the exact identity sums.

    cfg: McConfig | None: Monte Carlo configuration, needed by seeded suites.

    model: LevyModel: The branching mechanism sampled by the suite.

    control: LevyModel | None: Negative control model of the fixed-s suite.

    s0: float: Re-rooting fraction of the fixed-s suite.

    k: int: Vertex samples per tree of the ISE suite.

    battery: list[FunctionalSpec] | None: Functional battery, the default when None.

    measure: FiniteMeasure | None: μ of the spine suite, the default when None.

    delta: Fraction: Walk unit of the spine suite.

    right_mass_csv: Path | None: Where the ISE suite appends its estimates.
    """

    n: int = 5
    n_max: int = 6
    cfg: McConfig | None = None
    model: LevyModel = field(default_factory=LevyModel.brownian)
    control: LevyModel | None = None
    s0: float = 0.3
    k: int = 500
    battery: list[FunctionalSpec] | None = None
    measure: FiniteMeasure | None = None
    delta: Fraction = KEY2_DELTA
    right_mass_csv: Path | None = None

    def config(self) -> McConfig:
        """Return the Monte Carlo configuration.

        Raises:
            ConfigError: The suite is seeded but no configuration was given.

        """
        if self.cfg is None:
            msg = "This suite needs a Monte Carlo configuration."
            raise ConfigError(msg)
        return self.cfg


type Suite = Callable[[SuiteRequest], TestReport]

SUITES: dict[SuiteMode, dict[str, Suite]] = {
    "exact": {
        "reroot-bijection": lambda r: verify_reroot_bijection(r.n),
        "prop1": lambda r: verify_prop1_exact(r.n_max, r.battery),
        "time-reversal": lambda r: verify_time_reversal_exact(r.n),
        "split-identity": lambda r: verify_split_identity(r.n),
        "isometry": lambda r: verify_isometry(r.config()),
        "key2-identities": lambda r: verify_key2_identities(r.config()),
    },
    "mc": {
        "fixed-s": lambda r: verify_fixed_s_mc(
            r.model,
            r.s0,
            r.config(),
            battery=r.battery,
            control=r.control,
        ),
        "uniform-reroot": lambda r: verify_uniform_reroot_mc(
            r.model,
            r.config(),
            battery=r.battery,
        ),
        "triplet": lambda r: verify_triplet(r.config(), r.model),
        "ise": lambda r: verify_ise(r.config(), r.k, r.model, r.right_mass_csv),
        "key2": lambda r: verify_key2(
            r.measure if r.measure is not None else default_key2_measure(),
            r.config(),
            r.delta,
            r.battery,
        ),
        "time-reversal": lambda r: verify_time_reversal(r.config(), r.model, r.battery),
    },
}


@beartype
def run_suite(mode: SuiteMode, name: str, request: SuiteRequest) -> TestReport:
    """Run the suite ``name`` of ``mode``.

    Raises:
        InputError: No such suite.

    """
    suites = SUITES[mode]
    if name not in suites:
        msg = f"Unknown {mode} suite {name!r}; choose from {', '.join(sorted(suites))}."
        raise InputError(msg)
    return suites[name](request)
