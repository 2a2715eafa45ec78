"""Hypothesis strategies shared by the tests."""
import numpy as np
from hypothesis import strategies as st

from qevoframe.simulation import Circuit, GateInstance, GateKind, StateVector

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def states(draw: st.DrawFn, min_qubits: int = 1, max_qubits: int = 5) -> StateVector:
    """Draw a random pure state with Gaussian amplitudes."""
    n = draw(st.integers(min_value=min_qubits, max_value=max_qubits))
    rng = np.random.default_rng(draw(seeds))
    amplitudes = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return StateVector.normalized(n, amplitudes)


@st.composite
def gates(draw: st.DrawFn, n_qubits: int) -> GateInstance:
    """Draw a valid gate of any kind for a register of `n_qubits` qubits."""
    kinds = list(GateKind) if n_qubits > 1 else [k for k in GateKind if k.arity == 1]
    kind = draw(st.sampled_from(kinds))
    qubit_a = draw(st.integers(min_value=0, max_value=n_qubits - 1))

    if kind.arity == 1:
        return GateInstance(kind, qubit_a)

    qubit_b = draw(st.integers(min_value=0, max_value=n_qubits - 1).filter(lambda q: q != qubit_a))
    return GateInstance(kind, qubit_a, qubit_b)


@st.composite
def circuits(draw: st.DrawFn, n_qubits: int, max_gates: int = 8) -> Circuit:
    """Draw a circuit of up to `max_gates` gates."""
    return Circuit(n_qubits, tuple(draw(st.lists(gates(n_qubits), max_size=max_gates))))
