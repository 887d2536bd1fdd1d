"""
Dense-matrix and exhaustive-enumeration references for small systems.
"""

import itertools
from functools import reduce
from typing import Sequence

import numpy as np

from qrao.encoding import RelaxedHamiltonian, VertexPauliMap, check_deformation
from qrao.errors import InvalidArgumentError, SizeLimitError
from qrao.graph import Graph, cut_value
from qrao.pauli import PauliString
from qrao.rounding import basis_density, decode_qubit, rounding_bases
from qrao.statevector import IDENTITY, PAULI_X, PAULI_Y, PAULI_Z, Statevector

DENSE_MAX_QUBITS = 10
CHANNEL_MAX_QUBITS = 3

_LETTER_MATRIX = {"I": IDENTITY, "X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}


def kron_qubits(factors: Sequence[np.ndarray]) -> np.ndarray:
    """Tensor product with ``factors[q]`` acting on qubit ``q`` (bit q of the index)."""
    return reduce(np.kron, reversed(list(factors)), np.ones((1, 1), dtype=complex))


def pauli_matrix(p: PauliString) -> np.ndarray:
    if p.n > DENSE_MAX_QUBITS:
        raise SizeLimitError(f"dense Pauli matrices are capped at {DENSE_MAX_QUBITS} qubits")
    return kron_qubits([_LETTER_MATRIX[p.letter(q)] for q in range(p.n)])


def dense_hamiltonian(h: RelaxedHamiltonian) -> np.ndarray:
    if h.num_qubits > DENSE_MAX_QUBITS:
        raise SizeLimitError(
            f"dense Hamiltonians are capped at {DENSE_MAX_QUBITS} qubits, got {h.num_qubits}"
        )
    matrix = h.constant * np.eye(1 << h.num_qubits, dtype=complex)
    for coeff, term in h.terms:
        matrix += coeff * pauli_matrix(term)
    return matrix


def dense_extremal_eigenvalue(h: RelaxedHamiltonian) -> float:
    return float(np.linalg.eigvalsh(dense_hamiltonian(h))[-1])


def _num_qubits_of(rho: np.ndarray) -> int:
    dim = rho.shape[0]
    n = dim.bit_length() - 1
    if rho.shape != (dim, dim) or dim != 1 << n:
        raise InvalidArgumentError(f"density matrix shape {rho.shape} is not 2^n x 2^n")
    return n


def exact_channel_average(rho: np.ndarray, d: int = 3) -> np.ndarray:
    """
    Average post-measurement state of the rounding channel, by enumeration of every
    basis choice and outcome.
    """
    check_deformation(d)
    rho = np.asarray(rho, dtype=complex)
    n = _num_qubits_of(rho)
    if n > CHANNEL_MAX_QUBITS:
        raise SizeLimitError(f"channel oracle is capped at {CHANNEL_MAX_QUBITS} qubits")
    bases = rounding_bases(d)
    weight = 1.0 / len(bases) ** n
    average = np.zeros_like(rho)
    for choice in itertools.product(bases, repeat=n):
        for signs in itertools.product((1, -1), repeat=n):
            projector = kron_qubits([basis_density(b, s) for b, s in zip(choice, signs)])
            probability = np.trace(projector @ rho).real
            average += weight * probability * projector
    return average


def exact_expected_cut(psi: Statevector, mapping: VertexPauliMap, g: Graph) -> float:
    """Mean cut of magic rounding from ``psi``, summed over every basis choice and outcome."""
    n = psi.num_qubits
    if n != mapping.num_qubits:
        raise InvalidArgumentError("state and encoding disagree on the qubit count")
    if n > CHANNEL_MAX_QUBITS:
        raise SizeLimitError(f"channel oracle is capped at {CHANNEL_MAX_QUBITS} qubits")
    bases = rounding_bases(mapping.d)
    rho = np.outer(psi.amplitudes, psi.amplitudes.conj())
    weight = 1.0 / len(bases) ** n
    expected = 0.0
    for choice in itertools.product(bases, repeat=n):
        for signs in itertools.product((1, -1), repeat=n):
            projector = kron_qubits([basis_density(b, s) for b, s in zip(choice, signs)])
            probability = np.trace(projector @ rho).real
            spins = np.ones(g.num_vertices, dtype=np.int8)
            for qubit, (basis, sign) in enumerate(zip(choice, signs)):
                decode_qubit(mapping, qubit, basis, sign, spins)
            expected += weight * probability * cut_value(g, spins)
    return float(expected)
