"""Tests for states, gates and their application."""
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose
from pytest import approx

from qevoframe.simulation import (
    DomainError,
    GateInstance,
    GateKind,
    GatePool,
    StateVector,
    apply_gate,
    basis_state,
    marginal_probability,
    probabilities,
    sample_counts,
)
from tests.strategies import gates, states

H0 = GateInstance(GateKind.H, 0)
CNOT01 = GateInstance(GateKind.CNOT, 0, 1)


def bell_state() -> StateVector:
    """Prepare (|00> + |11>)/sqrt(2)."""
    return apply_gate(apply_gate(basis_state(2, 0), H0), CNOT01)


class TestStateVector:
    """Tests for the construction of states."""

    def test_basis_state_uses_qubit_zero_as_lowest_bit(self) -> None:
        """|q2 q1 q0> = |101> has index 5."""
        state = basis_state(3, 5)

        assert probabilities(state)[5] == 1
        assert marginal_probability(state, 0, 1) == 1
        assert marginal_probability(state, 1, 1) == 0
        assert marginal_probability(state, 2, 1) == 1

    def test_unnormalized_amplitudes_are_rejected(self) -> None:
        """The squared norm must be 1 within 1e-10."""
        with pytest.raises(DomainError):
            StateVector(1, np.array([1, 1]))

    def test_normalized_rescales(self) -> None:
        """`normalized` divides by the norm."""
        state = StateVector.normalized(1, [3, 4j])

        assert_allclose(probabilities(state), [0.36, 0.64])

    def test_wrong_amplitude_count_is_rejected(self) -> None:
        """Two qubits need four amplitudes."""
        with pytest.raises(DomainError):
            StateVector(2, np.array([1, 0]))

    def test_too_many_qubits_are_rejected(self) -> None:
        """Registers are limited to 8 qubits."""
        with pytest.raises(DomainError):
            basis_state(9, 0)

    def test_basis_index_out_of_range(self) -> None:
        """Two qubits have the basis indices 0..3."""
        with pytest.raises(DomainError):
            basis_state(2, 4)

    def test_amplitudes_are_read_only(self) -> None:
        """States are immutable so they can be shared."""
        state = basis_state(1, 0)

        with pytest.raises(ValueError):
            state.amplitudes[0] = 0


class TestGates:
    """Tests for the gate kinds and pools."""

    @pytest.mark.parametrize("kind", list(GateKind))
    def test_matrices_are_unitary(self, kind: GateKind) -> None:
        """U U^† = I for every gate kind."""
        matrix = kind.matrix

        assert_allclose(matrix @ matrix.conj().T, np.eye(matrix.shape[0]), atol=1e-12)

    def test_default_pool_order(self) -> None:
        """Gate ids follow the order H, X, Z, CNOT, SWAP."""
        assert GatePool().names == ["H", "X", "Z", "CNOT", "SWAP"]
        assert GatePool().single_qubit_ids() == [0, 1, 2]

    def test_unknown_gate_id(self) -> None:
        """Gate ids beyond the pool are rejected."""
        with pytest.raises(DomainError):
            GatePool().kind(5)

    def test_unknown_gate_name(self) -> None:
        """Only the fixed gate kinds can be parsed."""
        with pytest.raises(DomainError):
            GatePool.from_names(["H", "RX"])

    def test_gate_line_format(self) -> None:
        """Gates print as `<KIND> <qubits>`."""
        assert str(CNOT01) == "CNOT 0 1"
        assert str(H0) == "H 0"


class TestApplyGate:
    """Tests for applying gates to states."""

    def test_x_flips_qubit(self) -> None:
        """X on q1 maps |000> to index 2."""
        state = apply_gate(basis_state(3, 0), GateInstance(GateKind.X, 1))

        assert probabilities(state)[2] == approx(1)

    def test_hadamard_creates_uniform_superposition(self) -> None:
        """H on |0> gives equal probabilities."""
        state = apply_gate(basis_state(1, 0), H0)

        assert_allclose(probabilities(state), [0.5, 0.5])

    def test_cnot_uses_first_qubit_as_control(self) -> None:
        """CNOT 0 1 maps |q1 q0> = |01> to |11>, but leaves |10> alone."""
        assert probabilities(apply_gate(basis_state(2, 1), CNOT01))[3] == approx(1)
        assert probabilities(apply_gate(basis_state(2, 2), CNOT01))[2] == approx(1)

    def test_cnot_control_above_target(self) -> None:
        """CNOT 2 0 flips q0 when q2 is set."""
        state = apply_gate(basis_state(3, 4), GateInstance(GateKind.CNOT, 2, 0))

        assert probabilities(state)[5] == approx(1)

    def test_swap_exchanges_qubits(self) -> None:
        """SWAP 0 2 maps index 1 (q0 set) to index 4 (q2 set)."""
        state = apply_gate(basis_state(3, 1), GateInstance(GateKind.SWAP, 0, 2))

        assert probabilities(state)[4] == approx(1)

    def test_bell_state(self) -> None:
        """H then CNOT prepares the Bell state."""
        assert_allclose(bell_state().amplitudes, np.array([1, 0, 0, 1]) / np.sqrt(2), atol=1e-12)

    def test_z_adds_phase_only(self) -> None:
        """Z leaves the probabilities of H|0> unchanged but flips the sign of |1>."""
        state = apply_gate(apply_gate(basis_state(1, 0), H0), GateInstance(GateKind.Z, 0))

        assert_allclose(state.amplitudes, np.array([1, -1]) / np.sqrt(2), atol=1e-12)

    def test_self_connected_two_qubit_gate(self) -> None:
        """A two-qubit gate needs two distinct qubits."""
        with pytest.raises(DomainError):
            apply_gate(basis_state(2, 0), GateInstance(GateKind.CNOT, 1, 1))

    def test_qubit_out_of_range(self) -> None:
        """A gate cannot address a qubit that the state doesn't have."""
        with pytest.raises(DomainError):
            apply_gate(basis_state(2, 0), GateInstance(GateKind.H, 2))

    @given(st.data())
    def test_gates_preserve_the_norm(self, data: st.DataObject) -> None:
        """Every gate is unitary, so the probabilities still sum to one."""
        state = data.draw(states(max_qubits=4))
        gate = data.draw(gates(state.n_qubits))

        assert probabilities(apply_gate(state, gate)).sum() == approx(1, abs=1e-10)

    @given(st.data())
    def test_self_inverse_gates(self, data: st.DataObject) -> None:
        """H, X, Z, CNOT and SWAP undo themselves."""
        state = data.draw(states(min_qubits=2, max_qubits=4))
        gate = data.draw(gates(state.n_qubits).filter(lambda g: g.kind not in ("S", "T")))

        twice = apply_gate(apply_gate(state, gate), gate)

        assert_allclose(twice.amplitudes, state.amplitudes, atol=1e-10)


class TestMeasurement:
    """Tests for probabilities and sampling."""

    def test_marginal_of_bell_state(self) -> None:
        """Both qubits of a Bell pair read 1 half of the time."""
        state = bell_state()

        assert marginal_probability(state, 0, 1) == approx(0.5)
        assert marginal_probability(state, 1, 0) == approx(0.5)

    def test_marginal_rejects_non_bits(self) -> None:
        """A measured value is 0 or 1."""
        with pytest.raises(DomainError):
            marginal_probability(basis_state(1, 0), 0, 2)

    def test_sample_counts_sum_to_shots(self) -> None:
        """Every shot lands on one outcome."""
        counts = sample_counts(bell_state(), 1000, np.random.default_rng(7))

        assert counts.sum() == 1000
        assert counts[1] == 0 and counts[2] == 0

    def test_sampling_a_basis_state(self) -> None:
        """A basis state always yields its own index."""
        counts = sample_counts(basis_state(3, 6), 50, np.random.default_rng(0))

        assert counts[6] == 50

    def test_sampling_needs_shots(self) -> None:
        """Zero shots are rejected."""
        with pytest.raises(DomainError):
            sample_counts(basis_state(1, 0), 0, np.random.default_rng(0))
