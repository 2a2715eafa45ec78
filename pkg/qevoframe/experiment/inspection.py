"""Inspection of single circuits and target tables, used by `measure` and `dump-table`."""
from __future__ import annotations

from enum import StrEnum
from pathlib import Path
from typing import Any

from qevoframe.fitness import ca_response, format_table, parse_target
from qevoframe.simulation import (
    basis_state,
    entropy_fitness,
    format_circuit,
    load_circuit,
    meyer_wallach_purity,
    probabilities,
    reduced_per_qubit,
    run_circuit,
)


class Metric(StrEnum):
    """What `measure` reports about a circuit run from |0…0⟩."""

    MW = "mw"
    VN = "vn"
    PURITY_PER_QUBIT = "purity_per_qubit"
    RESPONSE = "response"
    STATE = "state"
    CIRCUIT = "circuit"


def measure(path: Path, metric: Metric) -> Any:
    """Load a circuit file and compute one metric.

    The result is a JSON-compatible value, except for `circuit`, which is the circuit
    in its text format.

    :raises CircuitFormatError: If the file cannot be parsed.
    :raises DomainError: If the metric is undefined for the circuit.
    """
    circuit = load_circuit(path)

    if metric == Metric.CIRCUIT:
        return format_circuit(circuit)
    if metric == Metric.RESPONSE:
        return list(ca_response(circuit).probs)

    state = run_circuit(circuit, basis_state(circuit.n_qubits, 0))

    match metric:
        case Metric.MW:
            return meyer_wallach_purity(state)
        case Metric.VN:
            return entropy_fitness(state)
        case Metric.PURITY_PER_QUBIT:
            return [rho.to_json() for rho in reduced_per_qubit(state)]
        case Metric.STATE:
            return [float(p) for p in probabilities(state)]

    raise ValueError(f"Unknown metric {metric}")


def dump_table(target: str) -> str:
    """Get a target table in the 8-line table file format.

    :raises DomainError: If the target or rule number is invalid.
    """
    return format_table(parse_target(target))
