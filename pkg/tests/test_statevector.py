import numpy as np
import pytest

from qrao.errors import InvalidArgumentError, PreconditionError
from qrao.statevector import (
    PAULI_X,
    Statevector,
    apply_cz,
    apply_single_qubit,
    bloch_state,
    bloch_vector,
    check_unitary,
    measure_qubit_inplace,
    product_state,
    rx,
    ry,
    rz,
)


def test_statevector_requires_unit_norm():
    with pytest.raises(PreconditionError):
        Statevector(1, np.array([1.0, 1.0]))
    with pytest.raises(InvalidArgumentError):
        Statevector(2, np.array([1.0, 0.0]))
    psi = Statevector.from_amplitudes([1.0, 1.0], normalize=True)
    assert psi.probabilities() == pytest.approx([0.5, 0.5])


def test_amplitudes_are_read_only():
    psi = Statevector.zero(2)
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 0.0


def test_single_qubit_gate_targets_bit():
    psi = apply_single_qubit(Statevector.zero(2), 1, PAULI_X)
    assert psi.fidelity(Statevector.basis(2, 2)) == pytest.approx(1.0)


def test_rotations_are_unitary():
    for gate in (rx(0.3), ry(-1.2), rz(2.0)):
        check_unitary(gate)
    with pytest.raises(InvalidArgumentError):
        check_unitary(np.array([[1, 1], [0, 1]]))


def test_cz_phase():
    psi = apply_cz(Statevector.basis(2, 3), 0, 1)
    assert psi.amplitudes[3] == pytest.approx(-1.0)
    with pytest.raises(InvalidArgumentError):
        apply_cz(psi, 1, 1)


def test_measurement_collapses(rng):
    amplitudes = Statevector.basis(2, 1).copy_amplitudes()
    assert measure_qubit_inplace(amplitudes, 2, 0, rng) == 1
    assert measure_qubit_inplace(amplitudes, 2, 1, rng) == 0
    assert np.allclose(amplitudes, Statevector.basis(2, 1).amplitudes)


def test_measurement_statistics(rng):
    plus = np.array([1.0, 1.0], dtype=complex) / np.sqrt(2)
    outcomes = [measure_qubit_inplace(plus.copy(), 1, 0, rng) for _ in range(4000)]
    assert np.mean(outcomes) == pytest.approx(0.5, abs=0.05)


@pytest.mark.parametrize("vector", [(0, 0, 1), (1, 0, 0), (0, -1, 0), (1 / np.sqrt(3),) * 3])
def test_bloch_state_round_trip(vector):
    assert np.allclose(bloch_vector(bloch_state(vector)), vector)


def test_product_state_qubit_order():
    psi = product_state([bloch_state((0, 0, -1)), bloch_state((0, 0, 1))])
    assert psi.fidelity(Statevector.basis(2, 1)) == pytest.approx(1.0)
