"""Workflows: an ordered list of steps sharing one pool of data."""
from __future__ import annotations

from datetime import timedelta
from typing import Any, Self

from .step import Step, StepData


class Workflow:
    """Steps that run in the order they were added."""

    steps: list[Step]

    def __init__(self) -> None:
        self.steps = []

    def add_steps(self, *steps: Step) -> Self:
        """Append steps to the workflow."""
        self.steps.extend(steps)
        return self

    def initialize(self, *data: Any) -> InitializedWorkflow:
        """Provide the data that no task produces, keyed by its type."""
        return InitializedWorkflow(self, {type(item): item for item in data if item is not None})


class InitializedWorkflow:
    """A workflow together with its data and the time each executed step took."""

    workflow: Workflow
    step_data: StepData
    durations: dict[str, timedelta]

    def __init__(self, workflow: Workflow, step_data: StepData):
        self.workflow = workflow
        self.step_data = step_data
        self.durations = {}

    def add_data(self, data: Any) -> Self:
        """Make more data available, e.g. settings only known after initialization."""
        self.step_data[type(data)] = data
        return self

    def step(self, name: str) -> Step:
        """Look up a step by its name."""
        for step in self.workflow.steps:
            if step.name == name:
                return step
        raise KeyError(f"The workflow has no step named {name!r}")

    def execute_step(self, name: str) -> StepData:
        """Execute one step and record its duration."""
        initialized = self.step(name).initialize(self.step_data)
        self.step_data = initialized.execute()
        self.durations[name] = initialized.duration
        return self.step_data

    def execute(self) -> StepData:
        """Execute all steps in order."""
        for step in self.workflow.steps:
            self.execute_step(step.name)
        return self.step_data
