"""Entanglement measures used as fitness: Meyer-Wallach and von Neumann entropy."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .density import PSD_TOLERANCE, DensityMatrix, purity, reduced_per_qubit
from .errors import DomainError
from .statevector import StateVector

# Eigenvalues below this are exact zeros for the entropy
ZERO_EIGENVALUE = 1e-12


@dataclass(frozen=True, eq=False)
class LocalProjection:
    """The two non-normalized halves of a state split along one qubit.

    `u` holds the amplitudes where the qubit is 0, `v` those where it is 1.
    """

    qubit: int
    u: npt.NDArray[np.complex128]
    v: npt.NDArray[np.complex128]


def _require_entanglement_domain(state: StateVector) -> None:
    if state.n_qubits < 2:
        raise DomainError("Entanglement is undefined for a single qubit")


def project_on_qubit(state: StateVector, k: int) -> LocalProjection:
    """Project the state onto the local basis states |0> and |1> of qubit `k`.

    Both halves keep the ascending order of the remaining bits.
    """
    state.check_qubit(k)

    bits = (np.arange(state.dim) >> k) & 1
    return LocalProjection(
        qubit=k,
        u=state.amplitudes[bits == 0],
        v=state.amplitudes[bits == 1],
    )


def cross_distance(projection: LocalProjection) -> float:
    """Get the generalized cross product distance Σ_{i<j} |u_i v_j − u_j v_i|².

    This is zero exactly when `u` and `v` are parallel.
    """
    wedge = np.outer(projection.u, projection.v)
    wedge = wedge - wedge.T
    # The antisymmetric matrix holds every i<j term twice
    return float(np.sum(np.abs(wedge) ** 2) / 2)


def meyer_wallach_projections(state: StateVector) -> float:
    """Meyer-Wallach Q from the local projections: (4/n) Σ_k D(u^k, v^k)."""
    _require_entanglement_domain(state)

    n = state.n_qubits
    total = sum(cross_distance(project_on_qubit(state, k)) for k in range(n))
    return 4 / n * total


def _mean_single_qubit_purity(state: StateVector) -> float:
    return sum(purity(rho) for rho in reduced_per_qubit(state)) / state.n_qubits


def meyer_wallach_purity(state: StateVector) -> float:
    """Meyer-Wallach Q from the single-qubit purities: 2(1 − (1/n) Σ_k Tr[ρ_k²]).

    This is the canonical value used as fitness.
    """
    _require_entanglement_domain(state)
    return 2 * (1 - _mean_single_qubit_purity(state))


def meyer_wallach_normalized(state: StateVector) -> float:
    """Meyer-Wallach variant that divides the mean impurity by 1 − 1/n.

    Agrees with `meyer_wallach_purity` for two qubits only; GHZ₃ scores 0.75 here.
    """
    _require_entanglement_domain(state)

    n = state.n_qubits
    return (1 - _mean_single_qubit_purity(state)) / (1 - 1 / n)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Get S(ρ) = −Tr(ρ log₂ ρ) in bits.

    Eigenvalues in [-1e-9, 1e-12) count as zero, following 0·log 0 = 0.

    :raises DomainError: If the matrix has a clearly negative eigenvalue.
    """
    eigenvalues = rho.eigenvalues()
    if eigenvalues.min() < -PSD_TOLERANCE:
        raise DomainError(f"Density matrix has negative eigenvalue {eigenvalues.min()}")

    eigenvalues = eigenvalues[eigenvalues >= ZERO_EIGENVALUE]
    entropy = -float(np.sum(eigenvalues * np.log2(eigenvalues)))
    return max(entropy, 0.0)


def entropy_fitness(state: StateVector) -> float:
    """Sum the entropies of all single-qubit reduced states.

    The result lies in [0, n]; every maximally mixed qubit contributes one bit.
    """
    return sum(von_neumann_entropy(rho) for rho in reduced_per_qubit(state))
