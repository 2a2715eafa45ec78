"""Exact dense simulation of small pure states.

Basis index bit 0 (the least significant bit) belongs to qubit q0, bit 1 to q1 and so on.
The state |q2 q1 q0> = |101> therefore has index 5.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .errors import DomainError
from .gates import GateInstance

MAX_QUBITS = 8
NORM_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class StateVector:
    """The 2^n complex amplitudes of an n-qubit pure state.

    The amplitude array is read-only, so states can be shared freely between threads.
    """

    n_qubits: int
    amplitudes: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise DomainError(f"Number of qubits must be in 1..{MAX_QUBITS}, got {self.n_qubits}")

        amplitudes = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amplitudes.shape != (self.dim,):
            raise DomainError(
                f"Expected {self.dim} amplitudes for {self.n_qubits} qubits, "
                f"got {amplitudes.shape[0]}"
            )

        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1) > NORM_TOLERANCE:
            raise DomainError(f"State is not normalized, squared norm is {norm}")

        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def normalized(cls, n_qubits: int, amplitudes: npt.ArrayLike) -> StateVector:
        """Create a state from arbitrary non-zero amplitudes by rescaling them."""
        vector = np.asarray(amplitudes, dtype=np.complex128)
        norm = np.linalg.norm(vector)
        if norm == 0:
            raise DomainError("Cannot normalize the zero vector")
        return cls(n_qubits, vector / norm)

    @property
    def dim(self) -> int:
        """The dimension of the state space, 2^n."""
        return 1 << self.n_qubits

    def check_qubit(self, qubit: int) -> None:
        """Raise a `DomainError` if `qubit` is not part of this state."""
        if not 0 <= qubit < self.n_qubits:
            raise DomainError(f"Qubit {qubit} out of range for {self.n_qubits} qubits")


def basis_state(n_qubits: int, index: int) -> StateVector:
    """Prepare the computational basis state with the given index."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise DomainError(f"Number of qubits must be in 1..{MAX_QUBITS}, got {n_qubits}")
    if not 0 <= index < 1 << n_qubits:
        raise DomainError(f"Basis index {index} out of range for {n_qubits} qubits")

    amplitudes = np.zeros(1 << n_qubits, dtype=np.complex128)
    amplitudes[index] = 1
    return StateVector(n_qubits, amplitudes)


def apply_gate(state: StateVector, gate: GateInstance) -> StateVector:
    """Apply a gate to a state and return the resulting state.

    :raises DomainError: If the gate addresses qubits that the state doesn't have.
    """
    gate.validate(state.n_qubits)

    n = state.n_qubits
    targets = gate.qubits
    k = len(targets)
    # Qubit q lives on tensor axis n - 1 - q, because q0 is the least significant bit
    axes = [n - 1 - q for q in targets]

    tensor = np.moveaxis(state.amplitudes.reshape((2,) * n), axes, list(range(k)))
    shape = tensor.shape
    tensor = (gate.kind.matrix @ tensor.reshape(1 << k, -1)).reshape(shape)
    tensor = np.moveaxis(tensor, list(range(k)), axes)

    return StateVector(n, tensor.reshape(-1))


def probabilities(state: StateVector) -> npt.NDArray[np.float64]:
    """Get the measurement probability of every basis state, |c|^2 = a^2 + b^2."""
    amplitudes = state.amplitudes
    probs: npt.NDArray[np.float64] = amplitudes.real**2 + amplitudes.imag**2
    return probs


def marginal_probability(state: StateVector, qubit: int, value: int) -> float:
    """Get the probability that measuring `qubit` yields `value`."""
    state.check_qubit(qubit)
    if value not in (0, 1):
        raise DomainError(f"A measured bit is 0 or 1, got {value}")

    bits = (np.arange(state.dim) >> qubit) & 1
    return float(probabilities(state)[bits == value].sum())


def sample_counts(
    state: StateVector, shots: int, rng: np.random.Generator
) -> npt.NDArray[np.int64]:
    """Measure the whole register `shots` times and count each outcome."""
    if shots < 1:
        raise DomainError(f"Need at least one shot, got {shots}")

    probs = probabilities(state)
    counts: npt.NDArray[np.int64] = rng.multinomial(shots, probs / probs.sum())
    return counts
