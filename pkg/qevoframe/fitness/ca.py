"""The response of a 3-qubit circuit read as a cellular-automaton update."""
from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import Optional

import numpy as np

from qevoframe.simulation import (
    Circuit,
    DomainError,
    basis_state,
    marginal_probability,
    run_circuit,
    sample_counts,
)

from .tables import N_NEIGHBORHOODS

CA_QUBITS = 3
# The qubit measured after the circuit: it holds the updated middle cell
MEASURED_QUBIT = 0


class NeighborhoodEncoding(StrEnum):
    """Which qubit holds which cell of the neighborhood before the circuit runs."""

    # q2 = l, q1 = m, q0 = r
    L2_M1_R0 = "l2m1r0"
    # q0 = l, q1 = m, q2 = r
    L0_M1_R2 = "l0m1r2"

    def basis_index(self, neighborhood: int) -> int:
        """Get the basis state index that prepares neighborhood l·4 + m·2 + r."""
        if self == NeighborhoodEncoding.L2_M1_R0:
            return neighborhood

        left, middle, right = (neighborhood >> 2) & 1, (neighborhood >> 1) & 1, neighborhood & 1
        return right << 2 | middle << 1 | left


@dataclass(frozen=True)
class ResponseVector:
    """P(q0 measures 1) after running the circuit from each neighborhood."""

    probs: tuple[float, ...]


def ca_response(
    circuit: Circuit,
    shots: int = 0,
    rng: Optional[np.random.Generator] = None,
    encoding: NeighborhoodEncoding = NeighborhoodEncoding.L2_M1_R0,
) -> ResponseVector:
    """Run the circuit from all 8 neighborhoods and record how often q0 reads 1.

    With `shots == 0` the exact statevector probability is used. Otherwise the register
    is measured `shots` times per neighborhood, drawing from `rng`.
    """
    if circuit.n_qubits != CA_QUBITS:
        raise DomainError(f"A CA circuit acts on {CA_QUBITS} qubits, got {circuit.n_qubits}")
    if shots < 0:
        raise DomainError(f"The shot count must not be negative, got {shots}")
    if shots > 0 and rng is None:
        raise DomainError("Sampling shots needs a random generator")

    outcome_bit = (np.arange(1 << CA_QUBITS) >> MEASURED_QUBIT) & 1
    probs = []

    for neighborhood in range(N_NEIGHBORHOODS):
        initial = basis_state(CA_QUBITS, encoding.basis_index(neighborhood))
        final = run_circuit(circuit, initial)

        if shots == 0:
            probs.append(marginal_probability(final, MEASURED_QUBIT, 1))
        else:
            assert rng is not None
            counts = sample_counts(final, shots, rng)
            probs.append(float(counts[outcome_bit == 1].sum()) / shots)

    return ResponseVector(tuple(probs))
