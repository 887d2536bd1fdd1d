"""
Hardware-efficient ansatz circuits and extremal eigenstates of relaxed Hamiltonians.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from qrao.config import Settings
from qrao.encoding import RelaxedHamiltonian, apply_hamiltonian
from qrao.errors import ConvergenceError, InvalidArgumentError, SizeLimitError
from qrao.logging_utils import get_logger
from qrao.pauli import parity_signs
from qrao.statevector import Statevector, apply_1q_inplace, apply_cz_inplace, ry, rz

logger = get_logger(__name__)

PARAMS_PER_QUBIT = 3
# accepted residual, in units of tol * max(1, |E|)
RESIDUAL_SLACK = 1e3
EIGEN_METHODS = ("auto", "dense", "lanczos")


@dataclass(frozen=True)
class AnsatzSpec:
    """Layered Rz-Ry-Rz rotations with a linear CZ chain between layers."""

    num_qubits: int
    depth: int = 1

    def __post_init__(self):
        if self.num_qubits < 1:
            raise InvalidArgumentError("ansatz needs at least one qubit")
        if self.depth < 1:
            raise InvalidArgumentError(f"depth must be >= 1, got {self.depth}")

    @property
    def num_parameters(self) -> int:
        return PARAMS_PER_QUBIT * self.num_qubits * self.depth


def euler_rotation(theta1: float, theta2: float, theta3: float) -> np.ndarray:
    return rz(theta1) @ ry(theta2) @ rz(theta3)


def prepare_ansatz(spec: AnsatzSpec, params: Sequence[float]) -> Statevector:
    """
    Run the ansatz on |0...0>.

    ``params`` is read layer by layer, qubit by qubit, three angles per qubit.
    """
    params = np.asarray(params, dtype=float)
    if params.shape != (spec.num_parameters,):
        raise InvalidArgumentError(
            f"ansatz with {spec.num_qubits} qubits and depth {spec.depth} takes "
            f"{spec.num_parameters} parameters, got {params.size}"
        )
    n = spec.num_qubits
    angles = params.reshape(spec.depth, n, PARAMS_PER_QUBIT)
    amplitudes = np.zeros(1 << n, dtype=complex)
    amplitudes[0] = 1.0

    for layer in range(spec.depth):
        if layer > 0:
            for q in range(n - 1):
                apply_cz_inplace(amplitudes, n, q, q + 1)
        for q in range(n):
            apply_1q_inplace(amplitudes, n, q, euler_rotation(*angles[layer, q]))
    return Statevector(n, amplitudes)


def hamiltonian_sparse(h: RelaxedHamiltonian) -> sp.csr_matrix:
    """Sparse matrix of ``h`` in the computational basis."""
    dim = 1 << h.num_qubits
    k = np.arange(dim, dtype=np.int64)
    rows = [k]
    cols = [k]
    data = [np.full(dim, h.constant, dtype=complex)]
    for coeff, term in h.terms:
        signs = parity_signs(k, term.z_mask)
        phase = 1j ** ((term.x_mask & term.z_mask).bit_count() % 4)
        rows.append(k ^ term.x_mask)
        cols.append(k)
        data.append(coeff * phase * signs)
    matrix = sp.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dim, dim),
    )
    return matrix.tocsr()


def _fix_phase(vector: np.ndarray) -> np.ndarray:
    pivot = vector[np.argmax(np.abs(vector))]
    return vector * (np.conj(pivot) / abs(pivot))


def _dense_max(h: RelaxedHamiltonian) -> Tuple[float, np.ndarray]:
    values, vectors = np.linalg.eigh(hamiltonian_sparse(h).toarray())
    return float(values[-1]), vectors[:, -1]


def _lanczos_max(
    h: RelaxedHamiltonian, tol: float, settings: Settings, seed: int
) -> Tuple[float, np.ndarray]:
    dim = 1 << h.num_qubits
    shift = abs(h.constant) + sum(abs(c) for c, _ in h.terms)
    operator = LinearOperator(
        (dim, dim),
        matvec=lambda v: apply_hamiltonian(h, np.ravel(v)) + shift * np.ravel(v),
        dtype=complex,
    )
    rng = np.random.default_rng(seed)
    v0 = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    try:
        values, vectors = eigsh(
            operator,
            k=1,
            which="LA",
            v0=v0 / np.linalg.norm(v0),
            ncv=min(settings.lanczos_krylov_dim, dim),
            maxiter=settings.lanczos_max_restarts,
            tol=tol,
        )
    except ArpackNoConvergence as exc:
        residual = float("nan")
        if len(exc.eigenvalues):
            v = exc.eigenvectors[:, 0]
            residual = float(np.linalg.norm(operator.matvec(v) - exc.eigenvalues[0] * v))
        raise ConvergenceError(
            f"Lanczos did not converge within {settings.lanczos_max_restarts} restarts",
            residual,
        ) from exc
    return float(values[0]) - shift, vectors[:, 0]


def extremal_eigenstate(
    h: RelaxedHamiltonian,
    tol: Optional[float] = None,
    method: str = "auto",
    settings: Optional[Settings] = None,
    seed: int = 0,
) -> Tuple[Statevector, float]:
    """
    Highest-energy eigenstate of ``h``.

    Args:
        h: Relaxed Hamiltonian.
        tol: Eigenvalue tolerance; defaults to ``settings.eigen_tol``.
        method: ``dense``, ``lanczos`` or ``auto`` (dense up to
            ``settings.dense_max_qubits``).
        settings: Limits; read from the environment when omitted.
        seed: Seed of the Lanczos start vector.

    Returns:
        Unit eigenvector (largest amplitude made real and positive) and its eigenvalue.

    Raises:
        SizeLimitError: More qubits than ``settings.eigensolver_max_qubits``.
        ConvergenceError: The sparse solver hit its restart cap or left a large residual.
    """
    settings = settings or Settings.from_env()
    tol = settings.eigen_tol if tol is None else tol
    if method not in EIGEN_METHODS:
        raise InvalidArgumentError(f"method must be one of {EIGEN_METHODS}, got {method!r}")
    n = h.num_qubits
    if n > settings.eigensolver_max_qubits:
        raise SizeLimitError(
            f"eigensolver is capped at {settings.eigensolver_max_qubits} qubits, got {n}"
        )

    use_dense = method == "dense" or (method == "auto" and n <= settings.dense_max_qubits)
    if use_dense or n <= 1:
        if n > settings.dense_max_qubits and method == "dense":
            raise SizeLimitError(
                f"dense eigensolver is capped at {settings.dense_max_qubits} qubits, got {n}"
            )
        _, vector = _dense_max(h)
        path = "dense"
    else:
        _, vector = _lanczos_max(h, tol, settings, seed)
        path = "lanczos"

    vector = _fix_phase(vector / np.linalg.norm(vector))
    h_vector = apply_hamiltonian(h, vector)
    energy = float(np.vdot(vector, h_vector).real)
    residual = float(np.linalg.norm(h_vector - energy * vector))
    if residual > RESIDUAL_SLACK * tol * max(1.0, abs(energy)):
        raise ConvergenceError(f"{path} eigenvector failed the residual check", residual)

    logger.debug(
        "extremal eigenstate",
        extra={"qubits": n, "path": path, "energy": energy, "residual": residual},
    )
    return Statevector(n, vector), energy
