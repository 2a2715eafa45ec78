"""The fixed gates available to circuits and the pools that genomes draw from."""
from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import Optional, Sequence

import numpy as np
import numpy.typing as npt

from .errors import DomainError

_SQRT_HALF = 1 / np.sqrt(2)

# Two-qubit matrices are indexed by 2 * bit(qubit_a) + bit(qubit_b).
_MATRICES: dict[str, npt.NDArray[np.complex128]] = {
    "H": np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT_HALF,
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
    "S": np.array([[1, 0], [0, 1j]], dtype=np.complex128),
    "T": np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=np.complex128),
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
    ),
    "CZ": np.diag([1, 1, 1, -1]).astype(np.complex128),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
    ),
}


class GateKind(StrEnum):
    """A fixed, parameterless gate."""

    H = "H"
    X = "X"
    Y = "Y"
    Z = "Z"
    S = "S"
    T = "T"
    CNOT = "CNOT"
    CZ = "CZ"
    SWAP = "SWAP"

    @property
    def arity(self) -> int:
        """The number of qubits the gate acts on."""
        return 2 if self in (GateKind.CNOT, GateKind.CZ, GateKind.SWAP) else 1

    @property
    def matrix(self) -> npt.NDArray[np.complex128]:
        """The unitary of the gate.

        For CNOT, `qubit_a` is the control and `qubit_b` the target.
        """
        return _MATRICES[self.value]

    @classmethod
    def parse(cls, name: str) -> GateKind:
        """Look up a gate kind by its uppercase name."""
        try:
            return cls(name)
        except ValueError:
            raise DomainError(f"Unknown gate kind {name!r}") from None


@dataclass(frozen=True)
class GateInstance:
    """A gate placed on specific qubits."""

    kind: GateKind
    qubit_a: int
    qubit_b: Optional[int] = None

    @property
    def qubits(self) -> tuple[int, ...]:
        """The qubits the gate acts on, in matrix order."""
        if self.kind.arity == 1:
            return (self.qubit_a,)

        assert self.qubit_b is not None
        return (self.qubit_a, self.qubit_b)

    def validate(self, n_qubits: int) -> None:
        """Check that the gate can be applied to a register of `n_qubits` qubits.

        :raises DomainError: If a qubit index is out of range or a two-qubit gate
        is connected to itself.
        """
        if self.kind.arity == 2:
            if self.qubit_b is None:
                raise DomainError(f"{self.kind} needs two qubits")
            if self.qubit_a == self.qubit_b:
                raise DomainError(f"{self.kind} cannot connect qubit {self.qubit_a} to itself")

        for qubit in self.qubits:
            if not 0 <= qubit < n_qubits:
                raise DomainError(f"Qubit {qubit} out of range for {n_qubits} qubits")

    def __str__(self) -> str:
        """Get the gate as a line of the circuit text format."""
        return " ".join([self.kind.value, *(str(q) for q in self.qubits)])


DEFAULT_POOL: tuple[GateKind, ...] = (
    GateKind.H,
    GateKind.X,
    GateKind.Z,
    GateKind.CNOT,
    GateKind.SWAP,
)


@dataclass(frozen=True)
class GatePool:
    """The gates a chromosome can encode, indexed by gate id."""

    kinds: tuple[GateKind, ...] = DEFAULT_POOL

    def __post_init__(self) -> None:
        if len(self.kinds) == 0:
            raise DomainError("A gate pool needs at least one gate")

    @classmethod
    def from_names(cls, names: Sequence[str]) -> GatePool:
        """Create a pool from gate names such as `["H", "CNOT"]`."""
        return cls(tuple(GateKind.parse(name) for name in names))

    def __len__(self) -> int:
        """Get the number of gates in the pool."""
        return len(self.kinds)

    def kind(self, gate_id: int) -> GateKind:
        """Get the gate kind encoded by `gate_id`."""
        if not 0 <= gate_id < len(self.kinds):
            raise DomainError(f"Gate id {gate_id} out of range for a pool of {len(self.kinds)}")
        return self.kinds[gate_id]

    def single_qubit_ids(self) -> list[int]:
        """Get the ids of all single-qubit gates."""
        return [i for i, kind in enumerate(self.kinds) if kind.arity == 1]

    @property
    def names(self) -> list[str]:
        """The gate names in id order."""
        return [kind.value for kind in self.kinds]
