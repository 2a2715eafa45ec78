"""Errors raised while wiring and running the tasks of a workflow."""
from __future__ import annotations


class InjectionError(RuntimeError):
    """The data a task asks for cannot be injected.

    Usually a parameter of the task's `__init__` or the return value of its
    work method lacks a type annotation.
    """

    pass


class ScheduleError(RuntimeError):
    """No order exists in which the tasks of a step can run.

    Either a task needs data that nothing provides, or tasks depend on each other in a cycle.
    """

    pass
