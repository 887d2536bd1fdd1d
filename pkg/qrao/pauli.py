"""
Bit-mask Pauli strings and matrix-free expectation values.

Qubit ``q`` is bit ``q`` of a basis-state index and the ``q``-th letter (from the
left) of a rendered string. With ``(x, z)`` bits per qubit the letters are
I=(0,0), X=(1,0), Y=(1,1), Z=(0,1), and the operator is
``P = i^{|x & z|} X^x Z^z``.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import TYPE_CHECKING, Tuple

import numpy as np

from qrao.errors import InternalInvariantError, InvalidArgumentError, PreconditionError

if TYPE_CHECKING:
    from qrao.statevector import Statevector

NORM_TOL = 1e-9
IMAG_TOL = 1e-9

_PHASES = (1 + 0j, 1j, -1 + 0j, -1j)


class Axis(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def bits(self) -> Tuple[int, int]:
        return {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}[self.value]

    @property
    def unit_vector(self) -> np.ndarray:
        return np.eye(3)["XYZ".index(self.value)]


@dataclass(frozen=True)
class PauliString:
    """An n-qubit Pauli operator without phase."""

    n: int
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgumentError("qubit count must be non-negative")
        limit = 1 << self.n
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise InvalidArgumentError(f"masks do not fit in {self.n} qubits")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse a letter sequence such as ``"XIZY"`` (qubit 0 leftmost)."""
        x_mask = z_mask = 0
        for qubit, letter in enumerate(label.upper()):
            if letter == "I":
                continue
            if letter not in "XYZ":
                raise InvalidArgumentError(f"bad Pauli letter {letter!r} in {label!r}")
            x, z = Axis(letter).bits
            x_mask |= x << qubit
            z_mask |= z << qubit
        return cls(len(label), x_mask, z_mask)

    @property
    def weight(self) -> int:
        return (self.x_mask | self.z_mask).bit_count()

    def letter(self, qubit: int) -> str:
        x = (self.x_mask >> qubit) & 1
        z = (self.z_mask >> qubit) & 1
        return "IZXY"[x * 2 + z]

    def support(self) -> Tuple[int, ...]:
        mask = self.x_mask | self.z_mask
        return tuple(q for q in range(self.n) if (mask >> q) & 1)

    def __str__(self) -> str:
        return "".join(self.letter(q) for q in range(self.n))


def single_axis_pauli(n: int, qubit: int, axis: Axis) -> PauliString:
    """Weight-1 Pauli with ``axis`` on ``qubit``."""
    if not 0 <= qubit < n:
        raise InvalidArgumentError(f"qubit {qubit} out of range for {n} qubits")
    x, z = Axis(axis).bits
    return PauliString(n, x << qubit, z << qubit)


def multiply(a: PauliString, b: PauliString) -> Tuple[PauliString, complex]:
    """
    Product ``a @ b`` as a Pauli string and a phase in {1, i, -1, -i}.
    """
    if a.n != b.n:
        raise InvalidArgumentError(f"size mismatch: {a.n} vs {b.n} qubits")
    x = a.x_mask ^ b.x_mask
    z = a.z_mask ^ b.z_mask
    # i^{|x1 z1|} X^x1 Z^z1 i^{|x2 z2|} X^x2 Z^z2 = i^{...} (-1)^{|z1 x2|} X^x Z^z
    exponent = (
        (a.x_mask & a.z_mask).bit_count()
        + (b.x_mask & b.z_mask).bit_count()
        + 2 * (a.z_mask & b.x_mask).bit_count()
        - (x & z).bit_count()
    )
    return PauliString(a.n, x, z), _PHASES[exponent % 4]


def commutes(a: PauliString, b: PauliString) -> bool:
    if a.n != b.n:
        raise InvalidArgumentError(f"size mismatch: {a.n} vs {b.n} qubits")
    return ((a.x_mask & b.z_mask).bit_count() + (a.z_mask & b.x_mask).bit_count()) % 2 == 0


@lru_cache(maxsize=32)
def _basis_indices(dim: int) -> np.ndarray:
    indices = np.arange(dim, dtype=np.int64)
    indices.setflags(write=False)
    return indices


def parity_signs(indices: np.ndarray, mask: int) -> np.ndarray:
    """``(-1)^{|k & mask|}`` for each index ``k`` as float64."""
    parity = np.bitwise_count(indices & mask).astype(np.int64) & 1
    return np.where(parity == 1, -1.0, 1.0)


def apply_pauli(p: PauliString, amplitudes: np.ndarray) -> np.ndarray:
    """Return ``P |psi>`` for a raw amplitude vector, in O(2^n)."""
    dim = 1 << p.n
    if amplitudes.shape != (dim,):
        raise InvalidArgumentError(
            f"state of dimension {amplitudes.shape[0]} does not match {p.n} qubits"
        )
    k = _basis_indices(dim)
    signs = parity_signs(k, p.z_mask)
    phase = _PHASES[(p.x_mask & p.z_mask).bit_count() % 4]
    out = np.empty(dim, dtype=complex)
    out[k ^ p.x_mask] = phase * signs * amplitudes
    return out


def expectation(p: PauliString, psi: "Statevector") -> float:
    """
    ``<psi|P|psi>`` computed without building a matrix.

    Raises:
        InvalidArgumentError: Dimension mismatch.
        PreconditionError: ``psi`` is not normalized within 1e-9.
    """
    if psi.num_qubits != p.n:
        raise InvalidArgumentError(
            f"Pauli on {p.n} qubits applied to a {psi.num_qubits}-qubit state"
        )
    amplitudes = psi.amplitudes
    norm = float(np.vdot(amplitudes, amplitudes).real)
    if abs(norm - 1.0) > NORM_TOL:
        raise PreconditionError(f"state norm {norm:.12f} is not 1")
    value = np.vdot(amplitudes, apply_pauli(p, amplitudes))
    if abs(value.imag) >= IMAG_TOL:
        raise InternalInvariantError(f"Pauli expectation has imaginary part {value.imag:.3e}")
    return float(value.real)
