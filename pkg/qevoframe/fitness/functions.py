"""The fitness functions: KL divergence to a CA table, Meyer-Wallach and von Neumann entropy.

Each comes in two layers. The plain functions score a circuit; the callable classes
score a chromosome, remember the optimization direction and memoize their results.
"""
from __future__ import annotations

import abc
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Optional, Sequence

import numpy as np
import numpy.typing as npt

from qevoframe.evolution import Chromosome, Direction, decode, stream
from qevoframe.simulation import (
    Circuit,
    DomainError,
    basis_state,
    entropy_fitness,
    meyer_wallach_normalized,
    meyer_wallach_purity,
    run_circuit,
)

from .ca import NeighborhoodEncoding, ca_response
from .cache import FitnessCache
from .tables import TargetTable

# Added to every normalized entry on the Q side, so deterministic tables stay finite
KL_SMOOTHING = 1e-10


class MeyerWallachMode(StrEnum):
    """Which normalization of the Meyer-Wallach measure to report."""

    # 2(1 − mean purity)
    CANONICAL = "canonical"
    # (1 − mean purity) / (1 − 1/n)
    NORMALIZED = "normalized"


def _as_distribution(values: Sequence[float], name: str) -> npt.NDArray[np.float64]:
    array = np.asarray(values, dtype=np.float64)
    if np.any(array < 0):
        raise DomainError(f"{name} has negative entries")
    total = array.sum()
    if total == 0:
        raise DomainError(f"{name} is all zero and cannot be normalized")
    distribution: npt.NDArray[np.float64] = array / total
    return distribution


def _relative_entropy(p: npt.NDArray[np.float64], q: npt.NDArray[np.float64]) -> float:
    q = q + KL_SMOOTHING
    support = p > 0
    divergence = float(np.sum(p[support] * np.log2(p[support] / q[support])))
    # Smoothing can push identical distributions a hair below zero
    return max(divergence, 0.0)


def kl_divergence(p: Sequence[float], q: Sequence[float]) -> float:
    """Get D_KL(P‖Q) in bits after normalizing both inputs to sum to one.

    :raises DomainError: If the inputs differ in length, have negative entries
    or sum to zero.
    """
    if len(p) != len(q):
        raise DomainError(f"Distributions differ in length: {len(p)} and {len(q)}")
    return _relative_entropy(_as_distribution(p, "P"), _as_distribution(q, "Q"))


def kl_fitness(
    circuit: Circuit,
    target: TargetTable,
    shots: int = 0,
    rng: Optional[np.random.Generator] = None,
    encoding: NeighborhoodEncoding = NeighborhoodEncoding.L2_M1_R0,
) -> float:
    """Score how well the circuit realizes the target table; 0 is a perfect match."""
    response = np.asarray(ca_response(circuit, shots, rng, encoding).probs)

    # A unitary spreads a total of 4 over the 8 responses, but sampling can still read all zeros
    total = response.sum()
    q = response / total if total > 0 else response

    return _relative_entropy(_as_distribution(target.probs, "Target table"), q)


def _check_register(circuit: Circuit) -> None:
    if circuit.n_qubits < 2:
        raise DomainError("Entanglement fitness needs at least two qubits")


def mw_fitness(circuit: Circuit, mode: MeyerWallachMode = MeyerWallachMode.CANONICAL) -> float:
    """Get the Meyer-Wallach entanglement of the state the circuit prepares from |0…0>."""
    _check_register(circuit)
    state = run_circuit(circuit, basis_state(circuit.n_qubits, 0))

    if mode == MeyerWallachMode.NORMALIZED:
        return meyer_wallach_normalized(state)
    return meyer_wallach_purity(state)


def vn_fitness(circuit: Circuit) -> float:
    """Get the summed single-qubit entropy of the state the circuit prepares from |0…0>."""
    _check_register(circuit)
    return entropy_fitness(run_circuit(circuit, basis_state(circuit.n_qubits, 0)))


@dataclass(frozen=True)
class ChromosomeFitness(abc.ABC):
    """A fitness function over chromosomes, as consumed by the evolutionary loop."""

    cache: FitnessCache = field(default_factory=FitnessCache, compare=False, kw_only=True)

    @property
    @abc.abstractmethod
    def direction(self) -> Direction:
        """Whether the fitness is minimized or maximized."""
        pass

    @abc.abstractmethod
    def score(self, chromosome: Chromosome) -> float:
        """Compute the fitness without consulting the cache."""
        pass

    def __call__(self, chromosome: Chromosome) -> float:
        """Get the fitness of a chromosome, memoized by its genes."""
        return self.cache.get_or_compute(chromosome.to_csv(), lambda: self.score(chromosome))


@dataclass(frozen=True)
class KlFitness(ChromosomeFitness):
    """KL divergence between a target table and the circuit's CA response (minimized).

    In shot mode the sampling generator is derived from the seed and the genes,
    so the score stays a pure function of the chromosome.
    """

    target: TargetTable
    shots: int = 0
    seed: int = 0
    encoding: NeighborhoodEncoding = NeighborhoodEncoding.L2_M1_R0

    @property
    def direction(self) -> Direction:
        """KL divergence is minimized."""
        return Direction.MINIMIZE

    def score(self, chromosome: Chromosome) -> float:
        """Decode the chromosome and compare its response to the target."""
        rng = stream(self.seed, *chromosome.flatten()) if self.shots > 0 else None
        return kl_fitness(decode(chromosome), self.target, self.shots, rng, self.encoding)


@dataclass(frozen=True)
class MwFitness(ChromosomeFitness):
    """Meyer-Wallach entanglement (maximized)."""

    mode: MeyerWallachMode = MeyerWallachMode.CANONICAL

    @property
    def direction(self) -> Direction:
        """Entanglement is maximized."""
        return Direction.MAXIMIZE

    def score(self, chromosome: Chromosome) -> float:
        """Decode the chromosome and measure its entanglement."""
        return mw_fitness(decode(chromosome), self.mode)


@dataclass(frozen=True)
class VnFitness(ChromosomeFitness):
    """Summed single-qubit von Neumann entropy (maximized)."""

    @property
    def direction(self) -> Direction:
        """Entropy is maximized."""
        return Direction.MAXIMIZE

    def score(self, chromosome: Chromosome) -> float:
        """Decode the chromosome and measure its entropy."""
        return vn_fitness(decode(chromosome))
