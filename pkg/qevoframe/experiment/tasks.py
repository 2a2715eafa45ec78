"""The abstract task types for each phase of an experiment."""
import abc
from typing import Any, TypeVar

from qevoframe.fitness import ChromosomeFitness
from qevoframe.workflow_engine import Task
from qevoframe.workflow_engine.task import return_type_of

T = TypeVar("T")


class ValidationTask(Task[None], abc.ABC):
    """A task to validate the experiment configuration before anything runs.

    The `validate` method may use assertions; failed assertions are reported as
    configuration errors.
    """

    def execute(self) -> None:
        """Execute the task by validating the configuration."""
        return self.validate()

    @classmethod
    def get_return_type(cls) -> Any:
        """Validation produces no data."""
        return None

    @abc.abstractmethod
    def validate(self) -> None:
        """Validate the configuration for the given module.

        :raises AssertionError: If the configuration is not valid.
        """
        pass


class FitnessConstructionTask(Task[ChromosomeFitness], abc.ABC):
    """A task to build the fitness function that the runs of the experiment optimize.

    Exactly one module of an experiment provides this task.
    """

    def execute(self) -> ChromosomeFitness:
        """Execute the task by constructing the fitness function."""
        return self.construct_fitness()

    @classmethod
    def get_return_type(cls) -> Any:
        """The fitness is always stored under the common base class."""
        return ChromosomeFitness

    @abc.abstractmethod
    def construct_fitness(self) -> ChromosomeFitness:
        """Build the fitness function from the configuration.

        The configuration can be obtained by adding `config: ExperimentConfig`
        to the constructor.
        """
        pass


class ReportingTask(Task[T], abc.ABC):
    """A task to derive and persist results once all runs have finished.

    The finished runs can be obtained by adding `records: RunRecords` to the constructor.
    """

    def execute(self) -> T:
        """Execute the task by writing the report."""
        return self.report()

    @classmethod
    def get_return_type(cls) -> Any:
        """Get the return type of the task."""
        return return_type_of(cls.report)

    @abc.abstractmethod
    def report(self) -> T:
        """Summarize, write or otherwise process the results of the runs."""
        pass
