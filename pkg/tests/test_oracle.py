import numpy as np
import pytest

from qrao.errors import SizeLimitError
from qrao.oracle import dense_hamiltonian, exact_channel_average, kron_qubits, pauli_matrix
from qrao.pauli import PauliString
from qrao.statevector import PAULI_X, PAULI_Z, Statevector


def test_kron_qubit_order():
    matrix = kron_qubits([PAULI_X, np.eye(2)])
    assert np.allclose(matrix @ Statevector.zero(2).amplitudes, Statevector.basis(2, 1).amplitudes)


def test_pauli_matrix_letters():
    assert np.allclose(pauli_matrix(PauliString.from_label("ZI")), kron_qubits([PAULI_Z, np.eye(2)]))


def test_channel_on_two_qubits_is_product():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0
    single = 0.5 * (np.eye(2) + PAULI_Z / 3)
    assert np.allclose(exact_channel_average(rho, 3), np.kron(single, single))


def test_size_caps():
    with pytest.raises(SizeLimitError):
        pauli_matrix(PauliString(11))
    with pytest.raises(SizeLimitError):
        exact_channel_average(np.eye(16) / 16)
    from qrao.encoding import RelaxedHamiltonian

    with pytest.raises(SizeLimitError):
        dense_hamiltonian(RelaxedHamiltonian(11, 0.0, ()))
