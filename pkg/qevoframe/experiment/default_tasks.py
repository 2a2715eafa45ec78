"""The default tasks of an experiment.

These tasks are added to the phases automatically when an experiment is initialized.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from qevoframe.evolution import RunRecord, decode, run, run_seed
from qevoframe.fitness import ChromosomeFitness
from qevoframe.simulation import DomainError, save_circuit
from qevoframe.workflow_engine import Task

from .config import ExperimentConfig
from .errors import ConfigError, OutputDirError
from .summary import ExperimentSummary, summarize, write_summary_csv
from .tasks import ReportingTask, ValidationTask

logger = logging.getLogger(__name__)


def _write_json(path: Path, values: Any) -> None:
    with path.open("w", encoding="utf-8", newline="\n") as file:
        file.write(json.dumps(values, indent=2) + "\n")


class ValidateExperimentTask(ValidationTask):
    """Check the settings shared by all fitness kinds."""

    config: ExperimentConfig

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def validate(self) -> None:
        """Validate run counts, shots, jobs, the gate pool and the evolution settings."""
        assert self.config.runs >= 1, "An experiment needs at least one run"
        assert self.config.jobs >= 1, "At least one job is needed"
        assert self.config.shots >= 0, "The shot count must not be negative"

        try:
            self.config.evolution_config(self.config.seed).validate()
        except DomainError as err:
            raise ConfigError(str(err)) from err


@dataclass(frozen=True)
class OutputLayout:
    """The files an experiment writes."""

    out_dir: Path

    @property
    def config_file(self) -> Path:
        """The copy of the configuration."""
        return self.out_dir / "config.json"

    @property
    def summary_file(self) -> Path:
        """The per-generation aggregates, which double as plot data."""
        return self.out_dir / "summary.csv"

    @property
    def best_circuit_file(self) -> Path:
        """The best circuit found, in the circuit text format."""
        return self.out_dir / "best_circuit.txt"

    @property
    def best_response_file(self) -> Path:
        """The CA response of the best circuit next to its target, for KL experiments."""
        return self.out_dir / "best_response.csv"

    def run_file(self, index: int) -> Path:
        """The record of one run."""
        return self.out_dir / f"run_{index}.json"


class PrepareOutputTask(Task[OutputLayout]):
    """Create the output directory and store the configuration in it.

    This fails before any run starts if the directory is not writable.
    """

    config: ExperimentConfig

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def execute(self) -> OutputLayout:
        """Create the directory and write `config.json`."""
        layout = OutputLayout(self.config.out_dir)

        try:
            layout.out_dir.mkdir(parents=True, exist_ok=True)
            _write_json(layout.config_file, self.config.to_dict())
        except OSError as err:
            raise OutputDirError(layout.out_dir, str(err)) from err

        return layout


@dataclass(frozen=True)
class RunSeeds:
    """The seed of every run, derived from the master seed."""

    seeds: tuple[int, ...]


class DeriveRunSeedsTask(Task[RunSeeds]):
    """Derive one independent seed per run."""

    config: ExperimentConfig

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def execute(self) -> RunSeeds:
        """Apply SplitMix64 to the master seed combined with each run index."""
        return RunSeeds(tuple(run_seed(self.config.seed, i) for i in range(self.config.runs)))


@dataclass(frozen=True)
class RunRecords:
    """The records of all runs, in run order."""

    records: tuple[RunRecord, ...]


class EvolveRunsTask(Task[RunRecords]):
    """Execute all runs, up to `jobs` of them at the same time.

    Each run writes only its own record file, so the results don't depend on scheduling.
    """

    config: ExperimentConfig
    seeds: RunSeeds
    fitness: ChromosomeFitness
    layout: OutputLayout

    def __init__(
        self,
        config: ExperimentConfig,
        seeds: RunSeeds,
        fitness: ChromosomeFitness,
        layout: OutputLayout,
    ):
        self.config = config
        self.seeds = seeds
        self.fitness = fitness
        self.layout = layout

    def execute(self) -> RunRecords:
        """Run the evolution once per seed."""
        logger.info(
            f"Starting {self.config.runs} run(s) of {self.config.fitness} fitness "
            f"with {self.config.jobs} job(s)"
        )

        with ThreadPoolExecutor(max_workers=self.config.jobs) as executor:
            records = list(executor.map(self._run, range(self.config.runs)))

        cache = self.fitness.cache
        logger.info(f"Fitness cache: {cache.hits} hits, {cache.misses} misses")
        return RunRecords(tuple(records))

    def _run(self, index: int) -> RunRecord:
        record = run(self.config.evolution_config(self.seeds.seeds[index]), self.fitness)
        _write_json(self.layout.run_file(index), record.to_dict())
        return record


class SummarizeRunsTask(ReportingTask[ExperimentSummary]):
    """Aggregate the runs into per-generation statistics."""

    config: ExperimentConfig
    records: RunRecords

    def __init__(self, config: ExperimentConfig, records: RunRecords):
        self.config = config
        self.records = records

    def report(self) -> ExperimentSummary:
        """Compute means and standard errors across runs."""
        return summarize(self.records.records, self.config.direction)


class WriteSummaryTask(ReportingTask[None]):
    """Write `summary.csv` and the best circuit."""

    summary: ExperimentSummary
    layout: OutputLayout

    def __init__(self, summary: ExperimentSummary, layout: OutputLayout):
        self.summary = summary
        self.layout = layout

    def report(self) -> None:
        """Write the summary files."""
        write_summary_csv(self.layout.summary_file, self.summary)
        save_circuit(self.layout.best_circuit_file, decode(self.summary.best_chromosome))

        logger.info(
            f"Best fitness {self.summary.best_fitness:.6g} (run seed {self.summary.best_seed}), "
            f"results in {self.layout.out_dir}"
        )
