"""One experiment module per fitness kind.

Each module validates the settings its fitness needs and constructs the fitness function.
The KL module also reports how closely the best circuit reproduces the target table.
"""
from __future__ import annotations

import csv

from qevoframe.evolution import decode
from qevoframe.fitness import (
    CA_QUBITS,
    ChromosomeFitness,
    KlFitness,
    MwFitness,
    VnFitness,
    ca_response,
    parse_target,
)
from qevoframe.simulation import CircuitFormatError, DomainError

from .config import ExperimentConfig, FitnessKind
from .default_tasks import OutputLayout
from .errors import ConfigError
from .experiment import ExperimentModule
from .summary import ExperimentSummary
from .tasks import FitnessConstructionTask, ReportingTask, ValidationTask

RESPONSE_COLUMNS = ("neighborhood", "target", "response")


class ValidateKlTask(ValidationTask):
    """KL fitness compares 3-qubit CA responses to a target table."""

    config: ExperimentConfig

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def validate(self) -> None:
        """Check the qubit count and that the target table can be loaded."""
        assert self.config.target is not None, "KL fitness needs a target table"
        assert (
            self.config.n_qubits == CA_QUBITS
        ), f"KL fitness needs {CA_QUBITS} qubits, got {self.config.n_qubits}"

        try:
            parse_target(self.config.target)
        except (DomainError, CircuitFormatError, OSError) as err:
            raise ConfigError(f"Invalid target {self.config.target!r}: {err}") from err


class ConstructKlFitnessTask(FitnessConstructionTask):
    """Build the KL fitness for the configured target."""

    config: ExperimentConfig

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def construct_fitness(self) -> ChromosomeFitness:
        """Resolve the target and create the fitness."""
        assert self.config.target is not None
        return KlFitness(
            target=parse_target(self.config.target),
            shots=self.config.shots,
            seed=self.config.seed,
            encoding=self.config.encoding,
        )


class WriteBestResponseTask(ReportingTask[None]):
    """Write the exact CA response of the best circuit next to the target table."""

    config: ExperimentConfig
    summary: ExperimentSummary
    layout: OutputLayout

    def __init__(self, config: ExperimentConfig, summary: ExperimentSummary, layout: OutputLayout):
        self.config = config
        self.summary = summary
        self.layout = layout

    def report(self) -> None:
        """Write one row per neighborhood with the target and the response."""
        assert self.config.target is not None
        target = parse_target(self.config.target)
        response = ca_response(decode(self.summary.best_chromosome), encoding=self.config.encoding)

        with self.layout.best_response_file.open("w", encoding="utf-8", newline="") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(RESPONSE_COLUMNS)
            for neighborhood, (p, q) in enumerate(zip(target.probs, response.probs)):
                writer.writerow([f"{neighborhood:03b}", repr(p), repr(q)])


class ValidateEntanglementTask(ValidationTask):
    """Entanglement fitness needs at least two qubits and no target."""

    config: ExperimentConfig

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def validate(self) -> None:
        """Check the qubit count and the absence of a target."""
        assert self.config.n_qubits >= 2, "Entanglement needs at least two qubits"
        assert self.config.target is None, "A target table is only used by KL fitness"


class ConstructMwFitnessTask(FitnessConstructionTask):
    """Build the Meyer-Wallach fitness."""

    config: ExperimentConfig

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def construct_fitness(self) -> ChromosomeFitness:
        """Create the fitness in the configured normalization."""
        return MwFitness(mode=self.config.mw_mode)


class ConstructVnFitnessTask(FitnessConstructionTask):
    """Build the von Neumann entropy fitness."""

    def construct_fitness(self) -> ChromosomeFitness:
        """Create the fitness."""
        return VnFitness()


kl_module = ExperimentModule(
    validation=ValidateKlTask, fitness=ConstructKlFitnessTask, reporting=WriteBestResponseTask
)
mw_module = ExperimentModule(validation=ValidateEntanglementTask, fitness=ConstructMwFitnessTask)
vn_module = ExperimentModule(validation=ValidateEntanglementTask, fitness=ConstructVnFitnessTask)

MODULES = {FitnessKind.KL: kl_module, FitnessKind.MW: mw_module, FitnessKind.VN: vn_module}


def module_for(fitness: FitnessKind) -> ExperimentModule:
    """Get the module implementing a fitness kind."""
    return MODULES[fitness]
