"""Tests for steps and workflows."""
from dataclasses import dataclass

import pytest

from qevoframe.workflow_engine import Step, Task, Workflow
from qevoframe.workflow_engine.errors import InjectionError, ScheduleError
from qevoframe.workflow_engine.step import task_dependencies


@dataclass
class Numbers:
    """Input data."""

    values: list[int]


@dataclass
class Total:
    """Data derived from the input."""

    value: int


@dataclass
class Report:
    """Data derived from the derived data."""

    text: str


class SumTask(Task[Total]):
    """Add up the numbers."""

    def __init__(self, numbers: Numbers):
        self.numbers = numbers

    def execute(self) -> Total:
        """Sum the values."""
        return Total(sum(self.numbers.values))


class ReportTask(Task[Report]):
    """Describe the total."""

    def __init__(self, total: Total, numbers: Numbers):
        self.total = total
        self.numbers = numbers

    def execute(self) -> Report:
        """Format the total."""
        return Report(f"{len(self.numbers.values)} numbers sum to {self.total.value}")


class UnannotatedTask(Task[None]):
    """A task whose dependency cannot be injected."""

    def __init__(self, numbers):  # type: ignore[no-untyped-def]
        self.numbers = numbers

    def execute(self) -> None:
        """Do nothing."""
        pass


class UntypedResultTask(Task[None]):
    """A task that returns data without declaring it."""

    def execute(self):  # type: ignore[no-untyped-def]
        """Return an undeclared value."""
        return 1


class TestTaskDependencies:
    """Tests for reading the dependencies of a task."""

    def test_annotated_parameters(self) -> None:
        """Every parameter is a dependency on its annotated type."""
        dependencies = task_dependencies(ReportTask)

        assert [(d.param, d.annotation) for d in dependencies] == [
            ("total", Total),
            ("numbers", Numbers),
        ]

    def test_no_init(self) -> None:
        """Tasks without a constructor need nothing."""
        assert task_dependencies(UntypedResultTask) == []

    def test_missing_annotation(self) -> None:
        """Parameters without annotation cannot be injected."""
        with pytest.raises(InjectionError):
            task_dependencies(UnannotatedTask)


class TestStep:
    """Tests for executing steps."""

    def test_tasks_run_in_dependency_order(self) -> None:
        """Tasks are ordered by their data, not by the order they were added."""
        step = Step("sum").add_tasks(ReportTask, SumTask)

        data = step.initialize({Numbers: Numbers([1, 2, 3])}).execute()

        assert data[Total] == Total(6)
        assert data[Report].text == "3 numbers sum to 6"

    def test_missing_data(self) -> None:
        """A dependency that nothing provides makes the step unschedulable."""
        with pytest.raises(ScheduleError):
            Step("sum").add_tasks(SumTask).initialize({}).execute()

    def test_untyped_result(self) -> None:
        """Results need a declared type."""
        with pytest.raises(InjectionError):
            Step("untyped").add_tasks(UntypedResultTask).initialize({}).execute()


class TestWorkflow:
    """Tests for executing workflows."""

    def test_steps_share_data(self) -> None:
        """Later steps can use the results of earlier steps."""
        workflow = (
            Workflow()
            .add_steps(Step("first").add_tasks(SumTask), Step("second").add_tasks(ReportTask))
            .initialize(Numbers([4, 5]))
        )

        data = workflow.execute()

        assert data[Report].text == "2 numbers sum to 9"
        assert set(workflow.durations) == {"first", "second"}

    def test_execute_single_step(self) -> None:
        """Steps can be executed one at a time."""
        workflow = Workflow().add_steps(Step("first").add_tasks(SumTask)).initialize()
        workflow.add_data(Numbers([1]))

        assert workflow.execute_step("first")[Total] == Total(1)

    def test_unknown_step(self) -> None:
        """Looking up a missing step fails."""
        with pytest.raises(KeyError):
            Workflow().initialize().step("missing")
