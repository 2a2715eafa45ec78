"""A unit of work inside a workflow step."""
import abc
import typing
from typing import Any, Callable, Generic, TypeVar

T = TypeVar("T")


def return_type_of(method: Callable[..., Any]) -> Any:
    """Resolve the return annotation of a method, `None` for methods returning nothing.

    Postponed (string) annotations are evaluated, so modules may use
    `from __future__ import annotations`.
    """
    hint = typing.get_type_hints(method).get("return")
    return None if hint is type(None) else hint


class Task(abc.ABC, Generic[T]):
    """A unit of work in a workflow step.

    The parameters of `__init__` declare what the task needs; the workflow passes in the
    data whose type matches each annotation. Whatever `execute` returns is stored under
    its annotated type, where later tasks can ask for it.
    """

    @abc.abstractmethod
    def execute(self) -> T:
        """Do the work of the task, once all of its inputs were injected."""
        pass

    @classmethod
    def get_return_type(cls) -> Any:
        """Get the type under which the result of the task is stored.

        Subclasses that delegate `execute` to a differently named method override this.
        """
        return return_type_of(cls.execute)
