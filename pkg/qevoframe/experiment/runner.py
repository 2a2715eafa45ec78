"""Entry points that run whole experiments and parameter sweeps."""
from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path
from typing import Sequence

import numpy as np

from .config import ExperimentConfig
from .errors import ConfigError
from .experiment import Experiment
from .modules import module_for
from .summary import ExperimentSummary, standard_error

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = (
    "value",
    "best_fitness_mean",
    "best_fitness_se",
    "best_fitness_min",
    "best_fitness_max",
    "overall_best",
)


def run_experiment(config: ExperimentConfig) -> ExperimentSummary:
    """Run `config.runs` seeded runs and write their records and summary to `out_dir`."""
    experiment = Experiment(f"{config.fitness}-{config.n_qubits}q-{config.n_gates}g")
    result = experiment.add_modules(module_for(config.fitness)).initialize(config).run()

    summary: ExperimentSummary = result[ExperimentSummary]
    return summary


class SweepParameter(StrEnum):
    """The settings a sweep can vary."""

    GATES = "gates"
    MUTATION = "mutation"


@dataclass(frozen=True)
class SweepRow:
    """The spread of the final best fitness of all runs for one swept value."""

    value: float
    best_fitness_mean: float
    best_fitness_se: float
    best_fitness_min: float
    best_fitness_max: float
    overall_best: float


@dataclass(frozen=True)
class SweepSummary:
    """One row per swept value, in the order the values were given."""

    parameter: SweepParameter
    rows: tuple[SweepRow, ...]


def run_sweep(
    base: ExperimentConfig, parameter: SweepParameter, values: Sequence[float]
) -> SweepSummary:
    """Run one experiment per value of `parameter` and write `sweep.csv`.

    Each experiment writes into its own subdirectory `<parameter>_<value>` of `base.out_dir`.
    """
    if not values:
        raise ConfigError("A sweep needs at least one value")

    rows = []
    for value in values:
        if parameter == SweepParameter.GATES:
            if value != int(value):
                raise ConfigError(f"Gate counts must be whole numbers, got {value}")
            value = int(value)
            config = base.replace(n_gates=value)
        else:
            config = base.replace(mutation_p=value)
        config = config.replace(out_dir=base.out_dir / f"{parameter}_{value}")

        logger.info(f"Sweep {parameter}={value}")
        summary = run_experiment(config)

        finals = np.array(summary.final_best)
        rows.append(
            SweepRow(
                value=value,
                best_fitness_mean=float(finals.mean()),
                best_fitness_se=float(standard_error(finals)),
                best_fitness_min=float(finals.min()),
                best_fitness_max=float(finals.max()),
                overall_best=summary.best_fitness,
            )
        )

    sweep = SweepSummary(parameter, tuple(rows))
    write_sweep_csv(base.out_dir / "sweep.csv", sweep)
    return sweep


def write_sweep_csv(path: Path, sweep: SweepSummary) -> None:
    """Write one row per swept value."""
    with path.open("w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in sweep.rows:
            writer.writerow(
                [
                    row.value,
                    repr(row.best_fitness_mean),
                    repr(row.best_fitness_se),
                    repr(row.best_fitness_min),
                    repr(row.best_fitness_max),
                    repr(row.overall_best),
                ]
            )
