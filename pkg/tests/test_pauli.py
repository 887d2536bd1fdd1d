import numpy as np
import pytest

from qrao.errors import InvalidArgumentError
from qrao.oracle import pauli_matrix
from qrao.pauli import (
    Axis,
    PauliString,
    apply_pauli,
    commutes,
    expectation,
    multiply,
    parity_signs,
    single_axis_pauli,
)
from qrao.statevector import Statevector
from tests.helpers import random_state


def test_label_rendering():
    p = PauliString.from_label("XIZY")
    assert str(p) == "XIZY"
    assert p.weight == 3
    assert p.support() == (0, 2, 3)
    with pytest.raises(InvalidArgumentError):
        PauliString.from_label("XQ")


def test_single_axis_pauli():
    assert str(single_axis_pauli(3, 1, Axis.Y)) == "IYI"
    with pytest.raises(InvalidArgumentError):
        single_axis_pauli(3, 3, Axis.X)


@pytest.mark.parametrize(
    "a, b, product, phase",
    [
        ("X", "Y", "Z", 1j),
        ("Y", "X", "Z", -1j),
        ("Z", "X", "Y", 1j),
        ("Y", "Y", "I", 1),
        ("XI", "IX", "XX", 1),
    ],
)
def test_multiply(a, b, product, phase):
    result, sign = multiply(PauliString.from_label(a), PauliString.from_label(b))
    assert str(result) == product
    assert sign == phase
    expected = pauli_matrix(PauliString.from_label(a)) @ pauli_matrix(PauliString.from_label(b))
    assert np.allclose(sign * pauli_matrix(result), expected)


def test_commutes():
    assert commutes(PauliString.from_label("XX"), PauliString.from_label("ZZ"))
    assert not commutes(PauliString.from_label("XI"), PauliString.from_label("ZI"))


def test_expectation_on_basis_states():
    # basis index 1 sets qubit 0
    psi = Statevector.basis(2, 1)
    assert expectation(PauliString.from_label("ZI"), psi) == -1.0
    assert expectation(PauliString.from_label("IZ"), psi) == 1.0
    assert expectation(PauliString.from_label("XI"), psi) == 0.0


def test_apply_pauli_matches_dense_matrix(rng):
    psi = random_state(3, rng)
    for label in ("XYZ", "IYI", "ZZX"):
        p = PauliString.from_label(label)
        assert np.allclose(apply_pauli(p, psi.amplitudes), pauli_matrix(p) @ psi.amplitudes)
        dense = np.vdot(psi.amplitudes, pauli_matrix(p) @ psi.amplitudes).real
        assert expectation(p, psi) == pytest.approx(dense, abs=1e-12)


def test_expectation_dimension_mismatch():
    with pytest.raises(InvalidArgumentError):
        expectation(PauliString.from_label("ZZ"), Statevector.zero(3))


def test_negative_eigenvalues_keep_their_sign():
    assert expectation(PauliString.from_label("Z"), Statevector.basis(1, 1)) == -1.0
    plus_i = Statevector.from_amplitudes([1, 1j], normalize=True)
    assert expectation(PauliString.from_label("Y"), plus_i) == pytest.approx(1.0, abs=1e-12)
    minus_i = Statevector.from_amplitudes([1, -1j], normalize=True)
    assert expectation(PauliString.from_label("Y"), minus_i) == pytest.approx(-1.0, abs=1e-12)


def test_parity_signs_are_signed_floats():
    signs = parity_signs(np.arange(4, dtype=np.int64), 0b11)
    assert signs.dtype == np.float64
    assert signs.tolist() == [1.0, -1.0, -1.0, 1.0]
