"""The error classes for the circuit simulation."""
from __future__ import annotations

from typing import Optional


class DomainError(ValueError):
    """An argument lies outside the domain of the operation.

    For example a qubit index that does not exist in the state or a rule number above 255.
    """

    pass


class CircuitFormatError(ValueError):
    """A textual representation (circuit, chromosome or table) cannot be parsed."""

    line_number: Optional[int]

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number

        if line_number is not None:
            message = f"line {line_number}: {message}"

        super().__init__(message)
