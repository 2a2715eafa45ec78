"""The experiment classes used to configure and execute a multi-run experiment."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Self, Type

from qevoframe.workflow_engine import Step, StepData, Workflow
from qevoframe.workflow_engine.workflow import InitializedWorkflow

from .config import ExperimentConfig
from .default_tasks import (
    DeriveRunSeedsTask,
    EvolveRunsTask,
    PrepareOutputTask,
    SummarizeRunsTask,
    ValidateExperimentTask,
    WriteSummaryTask,
)
from .errors import ConfigError
from .metrics import PhaseTimes
from .tasks import FitnessConstructionTask, ReportingTask, ValidationTask

VALIDATION = "validation"
PREPARATION = "preparation"
EVOLUTION = "evolution"
REPORTING = "reporting"


@dataclass
class ExperimentModule:
    """A module bundling the tasks of one fitness kind for the phases of an experiment."""

    validation: Optional[Type[ValidationTask]] = None
    fitness: Optional[Type[FitnessConstructionTask]] = None
    reporting: Optional[Type[ReportingTask[Any]]] = None


class Experiment:
    """A repeated evolutionary experiment.

    Modules supply the fitness being optimized and may add validation and reporting.
    """

    name: str
    modules: list[ExperimentModule]

    def __init__(self, name: str):
        """Create a new experiment.

        :param name: The name of the experiment, used in log messages.
        """
        self.name = name
        self.modules = []

    def add_modules(self, *modules: ExperimentModule) -> Self:
        """Add experiment modules.

        Exactly one of the added modules must construct the fitness function.
        """
        self.modules.extend(modules)
        return self

    def initialize(self, config: ExperimentConfig, *data: Any) -> InitializedExperiment:
        """Initialize the experiment with its configuration and any data the modules need."""
        validation = Step(VALIDATION).add_tasks(ValidateExperimentTask)
        preparation = Step(PREPARATION).add_tasks(PrepareOutputTask, DeriveRunSeedsTask)
        evolution = Step(EVOLUTION).add_tasks(EvolveRunsTask)
        reporting = Step(REPORTING).add_tasks(SummarizeRunsTask, WriteSummaryTask)

        fitness_tasks = [m.fitness for m in self.modules if m.fitness is not None]
        if len(fitness_tasks) != 1:
            raise ConfigError(
                f"Experiment {self.name} needs exactly one fitness module, got {len(fitness_tasks)}"
            )
        preparation.add_tasks(fitness_tasks[0])

        for module in self.modules:
            if module.validation is not None:
                validation.add_tasks(module.validation)

            if module.reporting is not None:
                reporting.add_tasks(module.reporting)

        workflow = (
            Workflow()
            .add_steps(validation, preparation, evolution, reporting)
            .initialize(config, *data)
        )
        return InitializedExperiment(workflow)


class InitializedExperiment:
    """An experiment bound to a configuration."""

    workflow: InitializedWorkflow

    def __init__(self, workflow: InitializedWorkflow):
        self.workflow = workflow

    def validate(self) -> ValidatedExperiment:
        """Validate the configuration.

        :raises ConfigError: If any validation task rejects the configuration.
        """
        try:
            self.workflow.execute_step(VALIDATION)
        except AssertionError as err:
            raise ConfigError(str(err) or "Invalid experiment configuration") from err

        return ValidatedExperiment(self.workflow)

    def run(self) -> StepData:
        """Execute all phases of the experiment.

        This is a shorthand for `.validate().prepare().evolve().report()`.
        """
        return self.validate().prepare().evolve().report()


class ValidatedExperiment:
    """An experiment whose configuration has been validated."""

    workflow: InitializedWorkflow

    def __init__(self, workflow: InitializedWorkflow):
        self.workflow = workflow

    def prepare(self) -> PreparedExperiment:
        """Create the output directory, derive the run seeds and build the fitness."""
        self.workflow.execute_step(PREPARATION)
        return PreparedExperiment(self.workflow)


class PreparedExperiment:
    """An experiment that is ready to run."""

    workflow: InitializedWorkflow

    def __init__(self, workflow: InitializedWorkflow):
        self.workflow = workflow

    def evolve(self) -> EvolvedExperiment:
        """Execute all runs."""
        self.workflow.execute_step(EVOLUTION)
        return EvolvedExperiment(self.workflow)


class EvolvedExperiment:
    """An experiment whose runs have finished."""

    workflow: InitializedWorkflow

    def __init__(self, workflow: InitializedWorkflow):
        self.workflow = workflow

    def report(self) -> StepData:
        """Summarize and persist the results.

        The returned data holds the `ExperimentSummary` and the `PhaseTimes`.
        """
        result = self.workflow.execute_step(REPORTING)

        durations = self.workflow.durations
        result[PhaseTimes] = PhaseTimes(
            validate=durations[VALIDATION],
            prepare=durations[PREPARATION],
            evolve=durations[EVOLUTION],
            report=durations[REPORTING],
        )

        return result
