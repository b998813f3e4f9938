"""Statistical machinery, verification suites and their reports."""

from levytree.harness.exact import (
    DurationWeight,
    random_lattice_measure,
    verify_isometry,
    verify_key2_identities,
    verify_prop1_exact,
    verify_reroot_bijection,
    verify_split_identity,
    verify_time_reversal_exact,
)
from levytree.harness.functionals import (
    FunctionalSpec,
    default_battery,
    evaluate_battery,
    parse_battery,
)
from levytree.harness.montecarlo import (
    default_key2_measure,
    verify_fixed_s_mc,
    verify_ise,
    verify_key2,
    verify_time_reversal,
    verify_triplet,
    verify_uniform_reroot_mc,
)
from levytree.harness.replicas import chunk_bounds, retrying, run_replicas
from levytree.harness.reports import (
    REPORT_VERSION,
    StatRow,
    SummaryRow,
    TestReport,
    append_report,
    read_reports,
    summarize,
)
from levytree.harness.stats import (
    KsResult,
    bonferroni,
    bonferroni_threshold,
    ks_two_sample,
    ks_uniform,
    two_sided_normal_p,
    z_score,
)
from levytree.harness.suites import SUITES, SuiteRequest, run_suite

__all__ = [
    "REPORT_VERSION",
    "SUITES",
    "DurationWeight",
    "FunctionalSpec",
    "KsResult",
    "StatRow",
    "SuiteRequest",
    "SummaryRow",
    "TestReport",
    "append_report",
    "bonferroni",
    "bonferroni_threshold",
    "chunk_bounds",
    "default_battery",
    "default_key2_measure",
    "evaluate_battery",
    "ks_two_sample",
    "ks_uniform",
    "parse_battery",
    "random_lattice_measure",
    "read_reports",
    "retrying",
    "run_replicas",
    "run_suite",
    "summarize",
    "two_sided_normal_p",
    "verify_fixed_s_mc",
    "verify_ise",
    "verify_isometry",
    "verify_key2",
    "verify_key2_identities",
    "verify_prop1_exact",
    "verify_reroot_bijection",
    "verify_split_identity",
    "verify_time_reversal",
    "verify_time_reversal_exact",
    "verify_triplet",
    "verify_uniform_reroot_mc",
    "z_score",
]
