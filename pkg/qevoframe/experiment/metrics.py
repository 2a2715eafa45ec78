"""Automatically recorded metrics of an experiment."""
from dataclasses import dataclass
from datetime import timedelta


@dataclass
class PhaseTimes:
    """The time spent in each phase of an experiment."""

    validate: timedelta
    prepare: timedelta
    evolve: timedelta
    report: timedelta

    @property
    def total(self) -> timedelta:
        """The wall time of the whole experiment.

        This is the sum of all phase times.
        """
        return sum([self.validate, self.prepare, self.evolve, self.report], timedelta())
