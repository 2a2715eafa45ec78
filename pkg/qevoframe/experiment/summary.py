"""Statistics across the runs of an experiment and their CSV form."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
import numpy.typing as npt

from qevoframe.evolution import Chromosome, Direction, RunRecord

SUMMARY_COLUMNS = (
    "generation",
    "mean_fitness_mean",
    "mean_fitness_se",
    "best_fitness_mean",
    "best_fitness_se",
)


@dataclass(frozen=True)
class GenerationAggregate:
    """The fitness statistics of one generation, taken over all runs."""

    generation: int
    mean_fitness_mean: float
    mean_fitness_se: float
    best_fitness_mean: float
    best_fitness_se: float


@dataclass(frozen=True)
class ExperimentSummary:
    """The aggregated outcome of an experiment."""

    direction: Direction
    runs: int
    generations: tuple[GenerationAggregate, ...]
    # The final best fitness of every run, in run order
    final_best: tuple[float, ...]
    best_fitness: float
    best_chromosome: Chromosome
    best_seed: int


def standard_error(values: npt.NDArray[np.float64], axis: int = 0) -> npt.NDArray[np.float64]:
    """Get the sample standard deviation divided by sqrt(count).

    A single sample has a standard error of 0.
    """
    count = values.shape[axis]
    if count < 2:
        return np.zeros(np.delete(values.shape, axis))
    se: npt.NDArray[np.float64] = np.std(values, axis=axis, ddof=1) / np.sqrt(count)
    return se


def summarize(records: Sequence[RunRecord], direction: Direction) -> ExperimentSummary:
    """Aggregate the per-generation statistics of several runs."""
    if not records:
        raise ValueError("Cannot summarize an experiment without runs")

    means = np.array([record.mean_series() for record in records])
    bests = np.array([record.best_series() for record in records])

    mean_of_means, se_of_means = means.mean(axis=0), standard_error(means)
    mean_of_bests, se_of_bests = bests.mean(axis=0), standard_error(bests)

    generations = tuple(
        GenerationAggregate(
            generation=g,
            mean_fitness_mean=float(mean_of_means[g]),
            mean_fitness_se=float(se_of_means[g]),
            best_fitness_mean=float(mean_of_bests[g]),
            best_fitness_se=float(se_of_bests[g]),
        )
        for g in range(means.shape[1])
    )

    # Ties go to the earlier run
    best_run = max(
        range(len(records)), key=lambda i: (direction.score(records[i].best_fitness), -i)
    )

    return ExperimentSummary(
        direction=direction,
        runs=len(records),
        generations=generations,
        final_best=tuple(record.best_fitness for record in records),
        best_fitness=records[best_run].best_fitness,
        best_chromosome=records[best_run].best_chromosome,
        best_seed=records[best_run].seed,
    )


def write_summary_csv(path: Path, summary: ExperimentSummary) -> None:
    """Write the per-generation aggregates, one row per generation."""
    with path.open("w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(SUMMARY_COLUMNS)
        for row in summary.generations:
            writer.writerow(
                [
                    row.generation,
                    repr(row.mean_fitness_mean),
                    repr(row.mean_fitness_se),
                    repr(row.best_fitness_mean),
                    repr(row.best_fitness_se),
                ]
            )
