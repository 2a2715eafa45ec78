"""Density operators, partial traces and purity."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
import numpy.typing as npt

from .errors import DomainError
from .statevector import StateVector

TOLERANCE = 1e-10
PSD_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A Hermitian, trace-one operator describing a pure or mixed state.

    Positive semi-definiteness is not checked on construction, as it needs an eigensolver;
    use `is_positive_semidefinite` where it matters.
    """

    entries: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.complex128)

        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DomainError(f"A density matrix must be square, got shape {entries.shape}")
        dim = entries.shape[0]
        if dim < 2 or dim & (dim - 1) != 0:
            raise DomainError(f"The dimension must be a power of two, got {dim}")
        if not np.allclose(entries, entries.conj().T, rtol=0, atol=TOLERANCE):
            raise DomainError("A density matrix must be Hermitian")
        trace = complex(np.trace(entries))
        if abs(trace - 1) > TOLERANCE:
            raise DomainError(f"A density matrix must have trace 1, got {trace}")

        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        """The dimension of the underlying state space."""
        return int(self.entries.shape[0])

    @property
    def n_qubits(self) -> int:
        """The number of qubits described by the matrix."""
        return self.dim.bit_length() - 1

    def eigenvalues(self) -> npt.NDArray[np.float64]:
        """Get the eigenvalues in ascending order.

        2×2 matrices use the closed form: writing the matrix as
        [[t + z, x - iy], [x + iy, t - z]], the eigenvalues are t ∓ sqrt(x² + y² + z²).
        Larger matrices go through LAPACK's Hermitian solver.
        """
        if self.dim == 2:
            a = self.entries[0, 0].real
            b = self.entries[1, 1].real
            t = (a + b) / 2
            r = np.sqrt((a - t) ** 2 + abs(self.entries[1, 0]) ** 2)
            return np.array([t - r, t + r])

        eigenvalues: npt.NDArray[np.float64] = np.linalg.eigvalsh(self.entries)
        return eigenvalues

    def is_positive_semidefinite(self) -> bool:
        """Check that no eigenvalue lies below -1e-9."""
        return bool(self.eigenvalues().min() >= -PSD_TOLERANCE)

    def to_json(self) -> list[list[list[float]]]:
        """Serialize the entries row-major as `[re, im]` pairs."""
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.entries]


def density_from_state(state: StateVector) -> DensityMatrix:
    """Get the projector |ψ><ψ| of a pure state."""
    amplitudes = state.amplitudes
    return DensityMatrix(np.outer(amplitudes, amplitudes.conj()))


def _spread_bits(positions: list[int]) -> npt.NDArray[np.int64]:
    """Map every integer below 2^len(positions) to the index with its bits at `positions`.

    Bit j of the compact integer ends up at bit `positions[j]` of the result.
    """
    compact = np.arange(1 << len(positions))
    spread = np.zeros_like(compact)
    for j, position in enumerate(positions):
        spread |= ((compact >> j) & 1) << position
    return spread


def partial_trace(rho: DensityMatrix, n_qubits: int, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every qubit that is not in `keep`.

    The kept qubits are re-indexed in ascending order, so the smallest kept qubit becomes
    bit 0 of the reduced matrix.

    :raises DomainError: If `keep` is empty, names a qubit that doesn't exist
    or `rho` doesn't describe `n_qubits` qubits.
    """
    if rho.dim != 1 << n_qubits:
        raise DomainError(f"Matrix of dimension {rho.dim} does not describe {n_qubits} qubits")

    kept = sorted(set(keep))
    if not kept:
        raise DomainError("At least one qubit must be kept")
    for qubit in kept:
        if not 0 <= qubit < n_qubits:
            raise DomainError(f"Qubit {qubit} out of range for {n_qubits} qubits")

    traced = [q for q in range(n_qubits) if q not in kept]

    # full[i, t] is the index of the basis state with kept part i and traced part t
    full = _spread_bits(kept)[:, None] | _spread_bits(traced)[None, :]
    reduced = rho.entries[full[:, None, :], full[None, :, :]].sum(axis=-1)

    return DensityMatrix(reduced)


def reduced_per_qubit(state: StateVector) -> list[DensityMatrix]:
    """Get the single-qubit reduced density matrix of every qubit, q0 first.

    Each matrix is computed straight from the amplitudes, which gives the same result
    as tracing the full projector without building it.
    """
    n = state.n_qubits
    tensor = state.amplitudes.reshape((2,) * n)
    reduced = []

    for qubit in range(n):
        # Rows are indexed by the value of `qubit`, columns by all other qubits
        rows = np.moveaxis(tensor, n - 1 - qubit, 0).reshape(2, -1)
        reduced.append(DensityMatrix(rows @ rows.conj().T))

    return reduced


def purity(rho: DensityMatrix) -> float:
    """Get Tr[ρ²], which is 1 for pure states and 1/dim for the maximally mixed state."""
    return float(np.trace(rho.entries @ rho.entries).real)
