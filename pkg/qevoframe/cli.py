"""The `qevoframe` command line interface."""
from __future__ import annotations

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar

import click

from qevoframe.evolution import FitnessEvaluationError, MutationMode
from qevoframe.experiment import (
    ConfigError,
    ExperimentConfig,
    FitnessKind,
    Metric,
    OutputDirError,
    SweepParameter,
    dump_table,
    measure,
    run_experiment,
    run_sweep,
)
from qevoframe.fitness import MeyerWallachMode, NeighborhoodEncoding
from qevoframe.simulation import CircuitFormatError, DomainError

F = TypeVar("F", bound=Callable[..., Any])

USER_ERRORS = (DomainError, CircuitFormatError, ConfigError, OutputDirError, FitnessEvaluationError)

# Maps command line options to `ExperimentConfig` fields
OPTION_FIELDS = {
    "qubits": "n_qubits",
    "gates": "n_gates",
    "population": "population_size",
    "elites": "elite_count",
    "generations": "n_generations",
    "runs": "runs",
    "mutation": "mutation_p",
    "mutation_mode": "mutation_mode",
    "fitness": "fitness",
    "target": "target",
    "shots": "shots",
    "seed": "seed",
    "jobs": "jobs",
    "out_dir": "out_dir",
    "pool": "pool",
    "encoding": "encoding",
    "mw_mode": "mw_mode",
    "reset_nonelites": "reset_nonelites",
}


def _choice(enum: Any) -> click.Choice:
    return click.Choice([member.value for member in enum])


def experiment_options(command: F) -> F:
    """Add the experiment settings as options.

    Options default to `None`, so only the given ones override the configuration file.
    """
    options = [
        click.option("--config", type=click.Path(path_type=Path), help="JSON configuration file."),
        click.option("--qubits", type=int, help="Qubits per circuit.  [default: 3]"),
        click.option("--gates", type=int, help="Gates per chromosome.  [default: 3]"),
        click.option("--population", type=int, help="Chromosomes per generation.  [default: 20]"),
        click.option("--elites", type=int, help="Elites kept per generation.  [default: 4]"),
        click.option("--generations", type=int, help="Generations per run.  [default: 500]"),
        click.option("--runs", type=int, help="Independent runs.  [default: 50]"),
        click.option("--mutation", type=float, help="Mutation probability.  [default: 0.1]"),
        click.option("--mutation-mode", type=_choice(MutationMode), help="How genes mutate."),
        click.option("--fitness", type=_choice(FitnessKind), help="Fitness.  [default: mw]"),
        click.option(
            "--target",
            help="KL target: critical, random1..3, rule:<n>, random:<seed> or file:<path>.",
        ),
        click.option("--shots", type=int, help="Shots per neighborhood, 0 is exact.  [default: 0]"),
        click.option("--seed", type=int, help="Master seed.  [default: 0]"),
        click.option("--jobs", type=int, help="Runs executed at the same time.  [default: 1]"),
        click.option("--out-dir", type=click.Path(path_type=Path), help="Output directory."),
        click.option("--pool", help="Comma-separated gate pool.  [default: H,X,Z,CNOT,SWAP]"),
        click.option("--encoding", type=_choice(NeighborhoodEncoding), help="Cell to qubit map."),
        click.option("--mw-mode", type=_choice(MeyerWallachMode), help="Meyer-Wallach scaling."),
        click.option(
            "--reset-nonelites/--mutate-nonelites",
            default=None,
            help="Refill non-elites randomly instead of mutating the elites.",
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def build_config(config: Optional[Path], **options: Any) -> ExperimentConfig:
    """Merge the configuration file with the options given on the command line."""
    base = ExperimentConfig.from_json(config) if config is not None else ExperimentConfig()

    if options.get("pool") is not None:
        options["pool"] = tuple(name.strip() for name in options["pool"].split(","))

    return base.replace(**{OPTION_FIELDS[name]: value for name, value in options.items()})


def _report_errors(command: F) -> F:
    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except USER_ERRORS as err:
            raise click.ClickException(str(err)) from err

    return wrapper  # type: ignore[return-value]


@click.group()
@click.option("--quiet", is_flag=True, help="Only log warnings and errors.")
def main(quiet: bool) -> None:
    """Evolve small quantum circuits towards a fitness target."""
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING if quiet else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@main.command()
@experiment_options
@_report_errors
def evolve(config: Optional[Path], **options: Any) -> None:
    """Run a multi-run experiment and write its results."""
    run_experiment(build_config(config, **options))


@main.command()
@click.option(
    "--parameter", type=_choice(SweepParameter), required=True, help="The setting to vary."
)
@click.option("--values", required=True, help="Comma-separated values, e.g. 3,5,10.")
@experiment_options
@_report_errors
def sweep(parameter: str, values: str, config: Optional[Path], **options: Any) -> None:
    """Run one experiment per value of a setting and compare them."""
    try:
        parsed = [float(value) for value in values.split(",")]
    except ValueError:
        raise click.BadParameter(f"Expected comma-separated numbers, got {values!r}") from None

    run_sweep(build_config(config, **options), SweepParameter(parameter), parsed)


@main.command(name="measure")
@click.argument("circuit_file", type=click.Path(path_type=Path))
@click.option("--metric", type=_choice(Metric), required=True, help="The quantity to report.")
@_report_errors
def measure_command(circuit_file: Path, metric: str) -> None:
    """Print a metric of the state a circuit prepares from |0…0⟩."""
    try:
        result = measure(circuit_file, Metric(metric))
    except OSError as err:
        raise click.ClickException(f"Cannot read {circuit_file}: {err}") from err

    if isinstance(result, str):
        click.echo(result, nl=False)
    else:
        click.echo(json.dumps(result))


@main.command(name="dump-table")
@click.argument("target")
@_report_errors
def dump_table_command(target: str) -> None:
    """Print a target table in the table file format."""
    try:
        click.echo(dump_table(target), nl=False)
    except OSError as err:
        raise click.ClickException(f"Cannot read {target}: {err}") from err