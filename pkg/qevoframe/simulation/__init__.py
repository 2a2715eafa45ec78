"""Exact simulation of small quantum circuits and the quantities measured on their states."""
from .circuit import Circuit, format_circuit, load_circuit, parse_circuit, run_circuit, save_circuit
from .density import DensityMatrix, density_from_state, partial_trace, purity, reduced_per_qubit
from .entanglement import (
    LocalProjection,
    cross_distance,
    entropy_fitness,
    meyer_wallach_normalized,
    meyer_wallach_projections,
    meyer_wallach_purity,
    project_on_qubit,
    von_neumann_entropy,
)
from .errors import CircuitFormatError, DomainError
from .gates import DEFAULT_POOL, GateInstance, GateKind, GatePool
from .statevector import (
    StateVector,
    apply_gate,
    basis_state,
    marginal_probability,
    probabilities,
    sample_counts,
)

__all__ = [
    "Circuit",
    "CircuitFormatError",
    "DEFAULT_POOL",
    "DensityMatrix",
    "DomainError",
    "GateInstance",
    "GateKind",
    "GatePool",
    "LocalProjection",
    "StateVector",
    "apply_gate",
    "basis_state",
    "cross_distance",
    "density_from_state",
    "entropy_fitness",
    "format_circuit",
    "load_circuit",
    "marginal_probability",
    "meyer_wallach_normalized",
    "meyer_wallach_projections",
    "meyer_wallach_purity",
    "parse_circuit",
    "partial_trace",
    "probabilities",
    "project_on_qubit",
    "purity",
    "reduced_per_qubit",
    "run_circuit",
    "sample_counts",
    "save_circuit",
    "von_neumann_entropy",
]
