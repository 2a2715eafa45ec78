"""Qevoframe evolves small quantum circuits towards entanglement and cellular-automaton targets."""

from qevoframe.evolution import Chromosome, EvolutionConfig, RunRecord, decode, encode, run
from qevoframe.experiment import (
    ConfigError,
    Experiment,
    ExperimentConfig,
    ExperimentModule,
    ExperimentSummary,
    FitnessKind,
    PhaseTimes,
    run_experiment,
    run_sweep,
)
from qevoframe.simulation import Circuit, CircuitFormatError, DomainError, StateVector
from qevoframe.workflow_engine import StepData

__all__ = [
    "Chromosome",
    "Circuit",
    "CircuitFormatError",
    "ConfigError",
    "DomainError",
    "EvolutionConfig",
    "Experiment",
    "ExperimentConfig",
    "ExperimentModule",
    "ExperimentSummary",
    "FitnessKind",
    "PhaseTimes",
    "RunRecord",
    "StateVector",
    "StepData",
    "decode",
    "encode",
    "run",
    "run_experiment",
    "run_sweep",
]
