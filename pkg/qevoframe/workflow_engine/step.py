"""The steps of a workflow.

Steps run one after another. The tasks within a step are ordered by the data they need.
"""

from __future__ import annotations

import inspect
import logging
import time
import typing
from dataclasses import dataclass
from datetime import timedelta
from typing import Any, Self, Type

from .errors import InjectionError, ScheduleError
from .task import Task

logger = logging.getLogger(__name__)

# Data available for injection, keyed by its type.
StepData = dict[Any, Any]


@dataclass(frozen=True)
class TaskDependency:
    """One `__init__` parameter of a task and the type of data it receives."""

    param: str
    annotation: Any

    def __str__(self) -> str:
        """Get the dependency as it reads in the task signature."""
        return f"{self.param}: {getattr(self.annotation, '__name__', self.annotation)}"


def task_dependencies(task: Type[Task[Any]]) -> list[TaskDependency]:
    """Read the dependencies of a task from the annotations of its `__init__`.

    :raises InjectionError: If a parameter has no type annotation.
    """
    if task.__init__ is object.__init__:
        return []

    hints = typing.get_type_hints(task.__init__)
    dependencies = []

    for name, param in inspect.signature(task.__init__).parameters.items():
        if name == "self" or param.kind in (param.VAR_POSITIONAL, param.VAR_KEYWORD):
            continue
        if name not in hints:
            raise InjectionError(
                f"Parameter {name!r} of {task.__name__}.__init__ needs a type annotation "
                "to be injected"
            )
        dependencies.append(TaskDependency(param=name, annotation=hints[name]))

    return dependencies


class Step:
    """A named group of tasks."""

    name: str
    tasks: list[Type[Task[Any]]]

    def __init__(self, name: str):
        self.name = name
        self.tasks = []

    def add_tasks(self, *tasks: Type[Task[Any]]) -> Self:
        """Register tasks to run in this step."""
        self.tasks.extend(tasks)
        return self

    def initialize(self, step_data: StepData) -> InitializedStep:
        """Bind the step to the data produced so far."""
        return InitializedStep(self, step_data)


class InitializedStep:
    """A step bound to the data it can draw from."""

    step: Step
    step_data: StepData
    duration: timedelta

    def __init__(self, step: Step, step_data: StepData):
        self.step = step
        self.step_data = step_data
        self.duration = timedelta()

    def name(self) -> str:
        """Get the name of the step."""
        return self.step.name

    def execute(self) -> StepData:
        """Run every task of the step once its inputs are available.

        :raises InjectionError: If a task lacks the annotations needed for injection,
        or returns data without declaring its type.
        :raises ScheduleError: If some tasks can never run.
        :return: The step data, extended by the results of the tasks.
        """
        start = time.perf_counter()
        logger.info(f"Executing step {self.name()}...")

        pending = {task: task_dependencies(task) for task in self.step.tasks}

        while pending:
            ready = [
                task
                for task, deps in pending.items()
                if all(dep.annotation in self.step_data for dep in deps)
            ]

            if not ready:
                missing = "\n".join(
                    f"- {task.__name__}: "
                    + ", ".join(str(d) for d in deps if d.annotation not in self.step_data)
                    for task, deps in pending.items()
                )
                raise ScheduleError(
                    f"The tasks of step {self.name()} could not be scheduled, "
                    f"some dependencies are never provided:\n{missing}"
                )

            for task in ready:
                self._run(task, pending.pop(task))

        self.duration = timedelta(seconds=time.perf_counter() - start)
        logger.info(f"Finished step {self.name()} in {self.duration.total_seconds():.2f}s.")

        return self.step_data

    def _run(self, task: Type[Task[Any]], dependencies: list[TaskDependency]) -> None:
        instance = task(**{dep.param: self.step_data[dep.annotation] for dep in dependencies})
        result = instance.execute()
        result_type = task.get_return_type()

        if result is not None and result_type is None:
            raise InjectionError(
                f"Task {task.__name__} returned data without a return annotation, "
                "so no other task can ask for it"
            )
        if result is not None:
            self.step_data[result_type] = result
