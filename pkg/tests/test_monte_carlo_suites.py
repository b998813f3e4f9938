"""Test the statistical suites on small configurations."""

from pathlib import Path

import pytest

from levytree.config import McConfig
from levytree.errors import ConfigError, DomainError, InputError
from levytree.generators import LevyModel
from levytree.harness import (
    SuiteRequest,
    default_key2_measure,
    run_suite,
    verify_fixed_s_mc,
    verify_ise,
    verify_key2,
    verify_time_reversal,
    verify_triplet,
    verify_uniform_reroot_mc,
)


def test_fixed_s_at_zero_on_shared_replicas(small_cfg: McConfig) -> None:
    """Test that H^[0] against H on the same excursions gives statistic 0 everywhere."""
    report = verify_fixed_s_mc(LevyModel.brownian(), 0.0, small_cfg, reuse_replicas=True)
    assert report.passed
    assert {row.statistic for row in report.stats} == {0.0}
    assert report.params["reuse_replicas"] is True


@pytest.mark.parametrize("s0", [-0.1, 1.0])
def test_fixed_s_outside_the_unit_interval(small_cfg: McConfig, s0: float) -> None:
    """Test that s0 must lie in [0, 1)."""
    with pytest.raises(DomainError):
        verify_fixed_s_mc(LevyModel.brownian(), s0, small_cfg)


def test_fixed_s(small_cfg: McConfig) -> None:
    """Test re-rooting at 3/10 of the duration on Brownian excursions."""
    report = verify_fixed_s_mc(LevyModel.brownian(), 0.3, small_cfg)
    assert report.passed
    assert report.mode == "statistical"
    assert report.params["m"] == 6
    assert report.params["threshold"] == pytest.approx(0.001 / 6)
    assert all(row.p is not None for row in report.stats)


def test_reports_do_not_depend_on_the_worker_hint(small_cfg: McConfig) -> None:
    """Test byte-identical canonical reports for one and two workers."""
    single = verify_fixed_s_mc(LevyModel.brownian(), 0.3, small_cfg)
    pooled = verify_fixed_s_mc(LevyModel.brownian(), 0.3, small_cfg.with_overrides(workers=2))
    assert single.canonical_json() == pooled.canonical_json()


def test_uniform_reroot(small_cfg: McConfig) -> None:
    """Test re-rooting at a uniform time."""
    report = verify_uniform_reroot_mc(LevyModel.brownian(), small_cfg)
    assert report.passed
    assert report.params["s0"] is None


def test_triplet(small_cfg: McConfig) -> None:
    """Test the marginal and moment rows of the triplet suite."""
    report = verify_triplet(small_cfg)
    assert report.passed
    assert [row.functional for row in report.stats] == [
        "component(0) vs component(1)",
        "component(0) vs component(2)",
        "component(1) vs component(2)",
        "E[x0*x1] - E[x1*x2] z",
        "E[x0*x1] - E[x0*x2] z",
        "E[x0*x1^2] - E[x1*x0^2] z",
    ]
    assert report.params["m"] == 3


def test_ise_writes_one_row_per_tree(small_cfg: McConfig, tmp_path: Path) -> None:
    """Test the right mass suite and its CSV rows."""
    destination = tmp_path / "right_mass.csv"
    report = verify_ise(small_cfg, k=50, right_mass_csv=destination)
    assert report.passed
    lines = destination.read_text().splitlines()
    assert lines[0] == "tree_id,k,right_mass"
    assert len(lines) == small_cfg.replicas + 1
    assert lines[1].startswith("0,50,")
    assert 0 <= report.params["mean_right_mass"] <= 1  # pyright: ignore[reportOperatorIssue]


def test_ise_needs_a_vertex(small_cfg: McConfig) -> None:
    """Test that k = 0 is rejected."""
    with pytest.raises(DomainError):
        verify_ise(small_cfg, k=0)


def test_key2(small_cfg: McConfig) -> None:
    """Test tilde(H^μ) against the reversal of H^μ̄ for the default measure."""
    cfg = small_cfg.with_overrides(step_budget=100_000)
    report = verify_key2(default_key2_measure(), cfg)
    assert report.passed
    assert report.params["units"] == 20
    assert report.params["scheme"] == "symmetric"


def test_time_reversal(small_cfg: McConfig) -> None:
    """Test that reversed excursions have the law of the originals."""
    assert verify_time_reversal(small_cfg).passed


def test_run_suite_by_name(small_cfg: McConfig) -> None:
    """Test the registry for an exact and a seeded suite."""
    assert run_suite("exact", "reroot-bijection", SuiteRequest(n=2)).passed
    report = run_suite("mc", "time-reversal", SuiteRequest(cfg=small_cfg))
    assert report.suite == "time-reversal"
    assert report.seed == small_cfg.seed


def test_run_suite_rejects_unknown_names() -> None:
    """Test that an unknown suite is an input error naming the choices."""
    with pytest.raises(InputError, match="reroot-bijection"):
        run_suite("exact", "bijection", SuiteRequest())


def test_seeded_suites_need_a_configuration() -> None:
    """Test that a seeded suite without a configuration is a configuration error."""
    with pytest.raises(ConfigError):
        run_suite("exact", "isometry", SuiteRequest())
