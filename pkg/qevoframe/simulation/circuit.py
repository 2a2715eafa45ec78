"""Circuits as ordered gate lists, their simulation and their text format.

The text format has one circuit per file. The first line is `qubits <n>`,
followed by one gate per line: `<KIND> <qubit_a> [<qubit_b>]`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import CircuitFormatError, DomainError
from .gates import GateInstance, GateKind
from .statevector import MAX_QUBITS, StateVector, apply_gate


@dataclass(frozen=True)
class Circuit:
    """A quantum circuit on a fixed number of qubits."""

    n_qubits: int
    gates: tuple[GateInstance, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))

        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise DomainError(f"Number of qubits must be in 1..{MAX_QUBITS}, got {self.n_qubits}")

        for gate in self.gates:
            gate.validate(self.n_qubits)

    def __len__(self) -> int:
        """Get the number of gates."""
        return len(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        """Concatenate two circuits on the same register."""
        if self.n_qubits != other.n_qubits:
            raise DomainError(
                f"Cannot join circuits on {self.n_qubits} and {other.n_qubits} qubits"
            )
        return Circuit(self.n_qubits, self.gates + other.gates)


def run_circuit(circuit: Circuit, initial: StateVector) -> StateVector:
    """Apply all gates of the circuit in order, starting from `initial`."""
    if initial.n_qubits != circuit.n_qubits:
        raise DomainError(
            f"Circuit acts on {circuit.n_qubits} qubits, but the state has {initial.n_qubits}"
        )

    state = initial
    for gate in circuit.gates:
        state = apply_gate(state, gate)

    return state


def format_circuit(circuit: Circuit) -> str:
    """Serialize a circuit to the text format."""
    lines = [f"qubits {circuit.n_qubits}", *(str(gate) for gate in circuit.gates)]
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    """Parse a circuit from the text format.

    :raises CircuitFormatError: With the offending line number, if a line cannot be parsed,
    names an unknown gate or uses a qubit index that is out of range.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    if not lines:
        raise CircuitFormatError("empty circuit file, expected 'qubits <n>'", 1)

    header = lines[0].split(" ")
    if len(header) != 2 or header[0] != "qubits" or not _is_index(header[1]):
        raise CircuitFormatError(f"expected 'qubits <n>', got {lines[0]!r}", 1)
    n_qubits = int(header[1])
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise CircuitFormatError(f"number of qubits must be in 1..{MAX_QUBITS}", 1)

    gates: list[GateInstance] = []
    for line_number, line in enumerate(lines[1:], start=2):
        gates.append(_parse_gate_line(line, n_qubits, line_number))

    return Circuit(n_qubits, tuple(gates))


def _is_index(text: str) -> bool:
    # str.isdigit also accepts non-ASCII digits such as "²", which int() rejects
    return text.isascii() and text.isdigit()


def _parse_gate_line(line: str, n_qubits: int, line_number: int) -> GateInstance:
    parts = line.split(" ")

    try:
        kind = GateKind.parse(parts[0])
    except DomainError as err:
        raise CircuitFormatError(str(err), line_number) from None

    if len(parts) != 1 + kind.arity or not all(_is_index(p) for p in parts[1:]):
        raise CircuitFormatError(
            f"{kind} takes {kind.arity} qubit index(es), got {line!r}", line_number
        )

    qubits = [int(p) for p in parts[1:]]
    gate = GateInstance(kind, qubits[0], qubits[1] if kind.arity == 2 else None)

    try:
        gate.validate(n_qubits)
    except DomainError as err:
        raise CircuitFormatError(str(err), line_number) from None

    return gate


def load_circuit(path: Path) -> Circuit:
    """Read a circuit file."""
    return parse_circuit(path.read_text(encoding="utf-8"))


def save_circuit(path: Path, circuit: Circuit) -> None:
    """Write a circuit file with LF line endings."""
    with path.open("w", encoding="utf-8", newline="\n") as file:
        file.write(format_circuit(circuit))
