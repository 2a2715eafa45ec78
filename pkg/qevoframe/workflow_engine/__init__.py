"""A small workflow engine that runs tasks and injects their dependencies by type.

Experiments are built on top of it: every phase of an experiment is a step.
"""
from .step import InitializedStep, Step, StepData
from .task import Task
from .workflow import InitializedWorkflow, Workflow

__all__ = ["Task", "Step", "InitializedStep", "StepData", "Workflow", "InitializedWorkflow"]
