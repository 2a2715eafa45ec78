"""Integer encoding of circuits.

A chromosome stores three integers per gate: the gate id in the pool and two qubit indices.
The second qubit is carried for single-qubit gates as well, so mutating only the gate id
can turn the gene into a valid two-qubit gate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from qevoframe.simulation import Circuit, CircuitFormatError, DomainError, GateInstance, GatePool


class MutationMode(StrEnum):
    """How a chromosome is mutated."""

    # Every gene is replaced by a fresh random gene with probability p
    GATE_REPLACE = "gate_replace"
    # The whole chromosome is regenerated with probability p
    FULL_REPLACE = "full_replace"


@dataclass(frozen=True)
class GateGene:
    """One gate of a chromosome."""

    gate_id: int
    qubit_a: int
    qubit_b: int


@dataclass(frozen=True)
class Chromosome:
    """An integer-encoded candidate circuit."""

    n_qubits: int
    genes: tuple[GateGene, ...]
    pool: GatePool = field(default_factory=GatePool)

    def __post_init__(self) -> None:
        object.__setattr__(self, "genes", tuple(self.genes))

    def __len__(self) -> int:
        """Get the number of genes, i.e. the gate count."""
        return len(self.genes)

    def flatten(self) -> list[int]:
        """Get the flat integer list of length 3 · gate count."""
        return [v for gene in self.genes for v in (gene.gate_id, gene.qubit_a, gene.qubit_b)]

    def to_csv(self) -> str:
        """Serialize the chromosome to one line of comma-separated integers."""
        return ",".join(str(value) for value in self.flatten())

    @classmethod
    def from_csv(cls, text: str, n_qubits: int, pool: GatePool = GatePool()) -> Chromosome:
        """Parse a chromosome from its comma-separated form.

        :raises CircuitFormatError: If the text is not a multiple of three integers
        or holds a gate id or qubit index outside the pool or register, or a
        two-qubit gate connected to itself.
        """
        parts = text.strip().split(",")
        if not all(part.isascii() and part.isdigit() for part in parts):
            raise CircuitFormatError(f"expected comma-separated integers, got {text!r}")
        if len(parts) % 3 != 0:
            raise CircuitFormatError(f"expected a multiple of three integers, got {len(parts)}")

        values = [int(part) for part in parts]
        genes = []
        for i in range(0, len(values), 3):
            gene = GateGene(values[i], values[i + 1], values[i + 2])
            if gene.gate_id >= len(pool):
                raise CircuitFormatError(f"gate id {gene.gate_id} is not in the pool")
            if gene.qubit_a >= n_qubits or gene.qubit_b >= n_qubits:
                raise CircuitFormatError(f"qubit index out of range for {n_qubits} qubits")
            kind = pool.kind(gene.gate_id)
            if kind.arity == 2 and gene.qubit_a == gene.qubit_b:
                raise CircuitFormatError(f"{kind} gate connects qubit {gene.qubit_a} to itself")
            genes.append(gene)

        return cls(n_qubits, tuple(genes), pool)


def repair(gene: GateGene, n_qubits: int, rng: np.random.Generator, pool: GatePool) -> GateGene:
    """Fix a two-qubit gate that is connected to itself.

    The second qubit is redrawn uniformly from the other qubits. On a single qubit,
    where no valid connection exists, the gate is redrawn from the single-qubit gates.
    """
    if pool.kind(gene.gate_id).arity == 1 or gene.qubit_a != gene.qubit_b:
        return gene

    if n_qubits == 1:
        single_ids = pool.single_qubit_ids()
        if not single_ids:
            raise DomainError("The pool has no single-qubit gate to place on one qubit")
        gate_id = single_ids[int(rng.integers(len(single_ids)))]
        return GateGene(gate_id, gene.qubit_a, gene.qubit_b)

    other = int(rng.integers(n_qubits - 1))
    if other >= gene.qubit_a:
        other += 1
    return GateGene(gene.gate_id, gene.qubit_a, other)


def random_gene(n_qubits: int, rng: np.random.Generator, pool: GatePool) -> GateGene:
    """Draw a gene uniformly and repair it."""
    gene = GateGene(
        gate_id=int(rng.integers(len(pool))),
        qubit_a=int(rng.integers(n_qubits)),
        qubit_b=int(rng.integers(n_qubits)),
    )
    return repair(gene, n_qubits, rng, pool)


def random_chromosome(
    n_qubits: int, n_gates: int, rng: np.random.Generator, pool: GatePool = GatePool()
) -> Chromosome:
    """Generate a random valid chromosome with `n_gates` genes."""
    if n_qubits < 1:
        raise DomainError(f"Need at least one qubit, got {n_qubits}")
    if n_gates < 1:
        raise DomainError(f"Need at least one gate, got {n_gates}")

    genes = tuple(random_gene(n_qubits, rng, pool) for _ in range(n_gates))
    return Chromosome(n_qubits, genes, pool)


def mutate(
    chromosome: Chromosome,
    p: float,
    mode: MutationMode,
    rng: np.random.Generator,
) -> Chromosome:
    """Mutate a chromosome, leaving the original untouched."""
    if not 0 <= p <= 1:
        raise DomainError(f"Mutation probability must be in [0, 1], got {p}")

    n_qubits, pool = chromosome.n_qubits, chromosome.pool

    if mode == MutationMode.FULL_REPLACE:
        if rng.random() < p:
            return random_chromosome(n_qubits, len(chromosome), rng, pool)
        return chromosome

    genes = tuple(
        random_gene(n_qubits, rng, pool) if rng.random() < p else gene
        for gene in chromosome.genes
    )
    return Chromosome(n_qubits, genes, pool)


def decode(chromosome: Chromosome) -> Circuit:
    """Turn a chromosome into the circuit it encodes, keeping the gene order.

    :raises CircuitFormatError: If a gene does not encode a valid gate.
    """
    gates = []
    for gene in chromosome.genes:
        try:
            kind = chromosome.pool.kind(gene.gate_id)
            gate = GateInstance(kind, gene.qubit_a, gene.qubit_b if kind.arity == 2 else None)
            gate.validate(chromosome.n_qubits)
        except DomainError as err:
            raise CircuitFormatError(f"invalid gene {gene}: {err}") from None
        gates.append(gate)

    return Circuit(chromosome.n_qubits, tuple(gates))


def encode(circuit: Circuit, pool: GatePool = GatePool()) -> Chromosome:
    """Turn a circuit into a chromosome; single-qubit genes repeat their qubit."""
    genes = []
    for gate in circuit.gates:
        if gate.kind not in pool.kinds:
            raise DomainError(f"{gate.kind} is not part of the gate pool")
        qubit_b = gate.qubit_b if gate.qubit_b is not None else gate.qubit_a
        genes.append(GateGene(pool.kinds.index(gate.kind), gate.qubit_a, qubit_b))

    return Chromosome(circuit.n_qubits, tuple(genes), pool)
