"""
Dense statevectors and the gate-level operations used by the simulator, the
rounding channels and the shadow collector.

Basis index bit ``q`` is qubit ``q``.
"""

from dataclasses import dataclass
from functools import reduce
from typing import Sequence, Tuple

import numpy as np

from qrao.errors import InvalidArgumentError, PreconditionError

NORM_TOL = 1e-9
UNITARY_TOL = 1e-10

IDENTITY = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S_DAGGER = np.array([[1, 0], [0, -1j]], dtype=complex)


def rz(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=complex)


def ry(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rx(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


@dataclass(frozen=True, eq=False)
class Statevector:
    """Normalized amplitudes of an n-qubit pure state (read-only)."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=complex)
        if amplitudes.shape != (1 << self.num_qubits,):
            raise InvalidArgumentError(
                f"{amplitudes.shape[0]} amplitudes do not describe {self.num_qubits} qubits"
            )
        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise PreconditionError(f"state norm {norm:.12f} is not 1")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def zero(cls, num_qubits: int) -> "Statevector":
        return cls.basis(num_qubits, 0)

    @classmethod
    def basis(cls, num_qubits: int, index: int) -> "Statevector":
        amplitudes = np.zeros(1 << num_qubits, dtype=complex)
        amplitudes[index] = 1.0
        return cls(num_qubits, amplitudes)

    @classmethod
    def from_amplitudes(cls, amplitudes: Sequence[complex], normalize: bool = False) -> "Statevector":
        """Wrap raw amplitudes, optionally rescaling them to unit norm."""
        amplitudes = np.asarray(amplitudes, dtype=complex)
        dim = amplitudes.shape[0]
        num_qubits = dim.bit_length() - 1
        if amplitudes.ndim != 1 or dim != 1 << num_qubits:
            raise InvalidArgumentError(f"length {dim} is not a power of two")
        if normalize:
            norm = np.linalg.norm(amplitudes)
            if norm == 0:
                raise InvalidArgumentError("cannot normalize the zero vector")
            amplitudes = amplitudes / norm
        return cls(num_qubits, amplitudes)

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def fidelity(self, other: "Statevector") -> float:
        if other.num_qubits != self.num_qubits:
            raise InvalidArgumentError("fidelity between states of different size")
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)) ** 2)

    def copy_amplitudes(self) -> np.ndarray:
        """Writable copy of the amplitudes."""
        return np.array(self.amplitudes, dtype=complex)


def check_unitary(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise InvalidArgumentError(f"single-qubit gate must be 2x2, got {u.shape}")
    if not np.allclose(u @ u.conj().T, IDENTITY, atol=UNITARY_TOL, rtol=0):
        raise InvalidArgumentError("gate is not unitary within 1e-10")
    return u


def apply_1q_inplace(amplitudes: np.ndarray, num_qubits: int, qubit: int, u: np.ndarray) -> None:
    """Apply a 2x2 gate to ``qubit`` of a writable amplitude array."""
    view = amplitudes.reshape(1 << (num_qubits - 1 - qubit), 2, 1 << qubit)
    view[...] = np.einsum("ab,ibj->iaj", u, view)


def apply_single_qubit(psi: Statevector, qubit: int, u: np.ndarray) -> Statevector:
    """Return ``u`` applied to ``qubit`` of ``psi``."""
    if not 0 <= qubit < psi.num_qubits:
        raise InvalidArgumentError(f"qubit {qubit} out of range for {psi.num_qubits} qubits")
    u = check_unitary(u)
    amplitudes = psi.copy_amplitudes()
    apply_1q_inplace(amplitudes, psi.num_qubits, qubit, u)
    return Statevector(psi.num_qubits, amplitudes)


def _cz_mask(num_qubits: int, q1: int, q2: int) -> np.ndarray:
    k = np.arange(1 << num_qubits)
    return ((k >> q1) & 1).astype(bool) & ((k >> q2) & 1).astype(bool)


def apply_cz_inplace(amplitudes: np.ndarray, num_qubits: int, q1: int, q2: int) -> None:
    amplitudes[_cz_mask(num_qubits, q1, q2)] *= -1


def apply_cz(psi: Statevector, q1: int, q2: int) -> Statevector:
    """Controlled-Z between ``q1`` and ``q2``."""
    if q1 == q2:
        raise InvalidArgumentError("CZ needs two distinct qubits")
    for q in (q1, q2):
        if not 0 <= q < psi.num_qubits:
            raise InvalidArgumentError(f"qubit {q} out of range for {psi.num_qubits} qubits")
    amplitudes = psi.copy_amplitudes()
    apply_cz_inplace(amplitudes, psi.num_qubits, q1, q2)
    return Statevector(psi.num_qubits, amplitudes)


def measure_qubit_inplace(
    amplitudes: np.ndarray, num_qubits: int, qubit: int, rng: np.random.Generator
) -> int:
    """
    Sample the Z outcome of ``qubit`` and collapse ``amplitudes`` onto it.

    Returns:
        0 or 1.
    """
    view = amplitudes.reshape(1 << (num_qubits - 1 - qubit), 2, 1 << qubit)
    p0 = float(np.sum(np.abs(view[:, 0, :]) ** 2))
    p0 = min(max(p0, 0.0), 1.0)
    outcome = 0 if rng.random() < p0 else 1
    view[:, 1 - outcome, :] = 0.0
    kept = p0 if outcome == 0 else 1.0 - p0
    amplitudes /= np.sqrt(kept)
    return outcome


def bloch_state(vector: Sequence[float]) -> np.ndarray:
    """Single-qubit pure state with the given unit Bloch vector."""
    x, y, z = (float(c) for c in vector)
    length = np.sqrt(x * x + y * y + z * z)
    if abs(length - 1.0) > 1e-9:
        raise InvalidArgumentError(f"Bloch vector {vector} does not have unit length")
    theta = np.arccos(np.clip(z, -1.0, 1.0))
    phi = np.arctan2(y, x)
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)], dtype=complex)


def bloch_vector(single_qubit: np.ndarray) -> Tuple[float, float, float]:
    a, b = single_qubit
    cross = np.conj(a) * b
    return (2 * cross.real, 2 * cross.imag, abs(a) ** 2 - abs(b) ** 2)


def product_state(qubit_states: Sequence[np.ndarray]) -> Statevector:
    """Tensor product with ``qubit_states[q]`` on qubit ``q``."""
    if not qubit_states:
        return Statevector(0, np.ones(1, dtype=complex))
    amplitudes = reduce(np.kron, reversed([np.asarray(s, dtype=complex) for s in qubit_states]))
    return Statevector.from_amplitudes(amplitudes, normalize=True)
