"""Commands that run experiment files"""

import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

import click

from . import create_console_logger, experiment_options
from ..constants import EXIT_ERROR
from ..errors import ConfigError, OutputError, RwrsError
from ..experiment import ExperimentConfig, ExperimentKind, load_experiment
from ..experiment.results import ExperimentResult, emit_csv, read_csv
from ..experiment.runner import fit_rows, run_experiment
from ..reporting.formatting.table import print_result

KERNEL_KINDS = (ExperimentKind.KERNEL_RECURRENT, ExperimentKind.KERNEL_TRANSIENT)


def load_for_command(
    command: str,
    kinds: Sequence[ExperimentKind],
    config: str,
    seed: Optional[int],
    threads: Optional[int],
    out: Optional[str],
) -> ExperimentConfig:
    experiment = load_experiment(Path(config)).with_overrides(
        seed=seed, threads=threads, output=Path(out) if out else None
    )
    if experiment.kind not in kinds:
        expected = " or ".join(str(kind) for kind in kinds)
        raise ConfigError(
            "kind",
            f"`rwrs {command}` runs {expected} experiments, not {experiment.kind}",
        )
    return experiment


def execute(
    command: str,
    kinds: Sequence[ExperimentKind],
    produce: Callable[[ExperimentConfig], ExperimentResult],
    config: str,
    seed: Optional[int],
    threads: Optional[int],
    out: Optional[str],
    verbose: bool,
):
    """Runs `produce` on the experiment file, prints the result and exits with its code."""
    console = create_console_logger(show_path=False, verbose=verbose, max_width=0)
    logger = logging.getLogger(__name__)
    try:
        experiment = load_for_command(command, kinds, config, seed, threads, out)
        result = produce(experiment)
        print_result(console, result)
        if experiment.output is not None:
            path = emit_csv(result.rows, experiment.output)
            logger.info(f"Wrote {len(result.rows)} row(s) to {path}")
        code = result.verdict.exit_code
    except RwrsError as exc:
        logger.error(exc.message)
        code = EXIT_ERROR
    sys.exit(code)


@click.command("sample-check")
@experiment_options
def sample_check(config, seed, threads, out, verbose):
    """Compare the scenery sampler with its characteristic function"""
    execute(
        "sample-check",
        (ExperimentKind.SAMPLER_CHECK,),
        run_experiment,
        config,
        seed,
        threads,
        out,
        verbose,
    )


@click.command("psi")
@experiment_options
def psi(config, seed, threads, out, verbose):
    """Ratio of the psi series to its small-t asymptotics"""
    execute(
        "psi",
        (ExperimentKind.PSI_RATIO,),
        run_experiment,
        config,
        seed,
        threads,
        out,
        verbose,
    )


@click.command("constants")
@experiment_options
def constants(config, seed, threads, out, verbose):
    """Renewal constants with their quadrature and Tauberian checks"""
    execute(
        "constants",
        (ExperimentKind.CONSTANTS,),
        run_experiment,
        config,
        seed,
        threads,
        out,
        verbose,
    )


@click.command("kernel")
@experiment_options
def kernel(config, seed, threads, out, verbose):
    """Estimate the potential kernel on the shift grid and fit its growth"""
    execute("kernel", KERNEL_KINDS, run_experiment, config, seed, threads, out, verbose)


@click.command("fit")
@experiment_options
@click.option(
    "--rows",
    "-r",
    "rows_path",
    required=True,
    type=click.Path(dir_okay=False),
    help="CSV file written by `rwrs kernel`",
)
def fit(config, seed, threads, out, verbose, rows_path):
    """Refit kernel rows of an earlier run"""

    def refit(experiment: ExperimentConfig) -> ExperimentResult:
        rows = read_csv(Path(rows_path))
        if not rows:
            raise OutputError(rows_path, "contains no rows")
        return fit_rows(experiment, rows)

    execute("fit", KERNEL_KINDS, refit, config, seed, threads, out, verbose)
