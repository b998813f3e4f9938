"""The ``levytree`` command line interface."""

import argparse
import logging
import logging.config
import math
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from rich.console import Console
from rich.table import Table

from levytree import __version__
from levytree.config import DEFAULT_ALPHA, McConfig
from levytree.errors import (
    EXIT_FAIL,
    EXIT_INTERNAL_ERROR,
    EXIT_PASS,
    exit_code_for,
    get_error_schema,
)
from levytree.generators import (
    LevyModel,
    gw_tree_conditioned,
    model_excursion,
    offspring_for,
    write_trees,
)
from levytree.harness import (
    SUITES,
    SuiteRequest,
    append_report,
    parse_battery,
    read_reports,
    run_suite,
    summarize,
)
from levytree.paths import ContourExcursion, read_path, reroot, write_path
from levytree.paths.finite_path import GRID_TOLERANCE
from levytree.rng import replica_stream, stream
from levytree.spine import FiniteMeasure

logger: logging.Logger = logging.getLogger("levytree")

VERBOSITY = ("WARNING", "INFO", "DEBUG")


def configure_logging(verbosity: int) -> None:
    """Send the ``levytree`` logger to stderr at the level picked by ``-v``."""
    level = VERBOSITY[min(verbosity, len(VERBOSITY) - 1)]
    logging.config.dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "plain": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
            },
            "handlers": {
                "console": {
                    "class": "logging.StreamHandler",
                    "formatter": "plain",
                    "stream": "ext://sys.stderr",
                },
            },
            "loggers": {
                "levytree": {"handlers": ["console"], "level": level, "propagate": False},
            },
        },
    )


def _model(args: argparse.Namespace) -> LevyModel:
    if args.model is not None:
        return LevyModel.parse(args.model)
    return LevyModel(gamma=args.gamma)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        msg = f"{text!r} is not a rational number."
        raise argparse.ArgumentTypeError(msg) from exc


def _add_model_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--gamma", type=float, default=2.0, help="Stable index γ in (1, 2].")
    parser.add_argument(
        "--model",
        default=None,
        help='Full model, e.g. "gamma=1.5,c=2"; overrides --gamma.',
    )


def _gen(args: argparse.Namespace) -> int:
    model = _model(args)
    rng = stream(args.seed)
    if args.what == "excursion":
        write_path(model_excursion(model, args.n, rng), args.out)
    elif args.what == "tree":
        offspring = offspring_for(model)
        trees = [
            gw_tree_conditioned(offspring, args.n, replica_stream(args.seed, index))
            for index in range(args.count)
        ]
        write_trees(trees, args.out)
    else:
        tree = gw_tree_conditioned(offspring_for(model), args.n, rng)
        write_path(tree.lukasiewicz_walk().as_path(), args.out)
    logger.info("Wrote %s %s to %s", model.describe(), args.what, args.out)
    return EXIT_PASS


def _reroot(args: argparse.Namespace) -> int:
    h = read_path(args.input, ContourExcursion)
    s = h.snap(args.s)
    if not math.isclose(s, args.s, rel_tol=GRID_TOLERANCE, abs_tol=GRID_TOLERANCE * h.step):
        logger.warning("Snapped re-rooting time %s to the grid time %s", args.s, s)
    write_path(reroot(h, s), args.out)
    return EXIT_PASS


def _config(args: argparse.Namespace) -> McConfig:
    return McConfig(
        grid=args.grid,
        replicas=args.replicas,
        seed=args.seed,
        alpha=args.alpha,
        workers=args.workers,
        step_budget=args.step_budget,
        max_retries=args.max_retries,
    )


def _verify(args: argparse.Namespace) -> int:
    request = SuiteRequest(
        n=args.n,
        n_max=args.n_max,
        cfg=_config(args),
        model=_model(args),
        control=None if args.control_gamma is None else LevyModel(gamma=args.control_gamma),
        s0=args.s0,
        k=args.k,
        battery=None if args.battery is None else parse_battery(args.battery),
        measure=(
            None if args.measure is None else FiniteMeasure.from_json(args.measure.read_text())
        ),
        delta=args.delta,
        right_mass_csv=args.right_mass_csv,
    )
    report = run_suite(args.mode, args.suite, request)
    if args.report is not None:
        append_report(args.report, report)
    sys.stdout.write(report.to_json() + "\n")
    return EXIT_PASS if report.passed else EXIT_FAIL


def _summarize(args: argparse.Namespace) -> int:
    rows = summarize(read_reports(args.reports))
    table = Table(title=str(args.reports))
    for column in ("suite", "mode", "pass", "tests", "min p", "seed", "runtime ms"):
        table.add_column(column)
    for row in rows:
        table.add_row(
            row.suite,
            row.mode,
            "pass" if row.passed else "[red]FAIL[/red]",
            str(row.tests),
            "-" if row.min_p is None else f"{row.min_p:.3g}",
            "-" if row.seed is None else str(row.seed),
            f"{row.runtime_ms:.0f}",
        )
    Console().print(table)
    return EXIT_PASS if all(row.passed for row in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of every subcommand."""
    parser = argparse.ArgumentParser(
        prog="levytree",
        description="Re-rooting and spine calculus of Lévy trees.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument(
        "--json-errors",
        action="store_true",
        help="Print errors as JSON payloads on stdout.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Sample an excursion, trees or a walk.")
    gen.add_argument("what", choices=("excursion", "tree", "walk"))
    _add_model_arguments(gen)
    gen.add_argument("--n", type=int, required=True, help="Grid size or edge count.")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1, help="Number of trees.")
    gen.add_argument("--out", type=Path, required=True)
    gen.set_defaults(handler=_gen)

    rerooting = commands.add_parser("reroot", help="Re-root a contour path CSV.")
    rerooting.add_argument("--in", dest="input", type=Path, required=True)
    rerooting.add_argument("--s", type=float, required=True, help="Re-rooting time.")
    rerooting.add_argument("--out", type=Path, required=True)
    rerooting.set_defaults(handler=_reroot)

    verify = commands.add_parser("verify", help="Run a verification suite.")
    verify.add_argument("mode", choices=tuple(SUITES))
    verify.add_argument("--suite", required=True)
    verify.add_argument("--n", type=int, default=5)
    verify.add_argument("--n-max", type=int, default=6)
    _add_model_arguments(verify)
    verify.add_argument("--control-gamma", type=float, default=None)
    verify.add_argument("--s0", type=float, default=0.3)
    verify.add_argument("--grid", type=int, default=4096)
    verify.add_argument("--replicas", type=int, default=20_000)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--step-budget", type=int, default=10**7)
    verify.add_argument("--max-retries", type=int, default=100)
    verify.add_argument("--k", type=int, default=500)
    verify.add_argument("--battery", default=None, help='e.g. "sup;area;eval_at(0.5)".')
    verify.add_argument("--measure", type=Path, default=None, help="Measure JSON file.")
    verify.add_argument("--delta", type=_fraction, default=Fraction(1, 4))
    verify.add_argument("--right-mass-csv", type=Path, default=None)
    verify.add_argument("--report", type=Path, default=None, help="JSON-lines file.")
    verify.set_defaults(handler=_verify)

    report = commands.add_parser("report", help="Work with report files.")
    report_commands = report.add_subparsers(dest="report_command", required=True)
    summary = report_commands.add_parser("summarize", help="Tabulate a report file.")
    summary.add_argument("reports", type=Path)
    summary.set_defaults(handler=_summarize)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return int(args.handler(args))
    except Exception as exc:  # noqa: BLE001
        code = exit_code_for(exc)
        if args.json_errors:
            sys.stdout.write(get_error_schema(exc).model_dump_json() + "\n")
        else:
            sys.stderr.write(f"levytree: {exc}\n")
        if code == EXIT_INTERNAL_ERROR:
            logger.exception("Unexpected error")
        return code


def run() -> None:
    """Console script entry point."""
    sys.exit(main())

