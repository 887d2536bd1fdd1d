"""
Runtime settings loaded from the environment (.env supported).
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, TypeVar

from dotenv import load_dotenv

from qrao.errors import InvalidArgumentError

PROJECT_ROOT = Path(__file__).parent.parent

T = TypeVar("T")


def _env(name: str, default: T, cast: Callable[[str], T]) -> T:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except ValueError as exc:
        raise InvalidArgumentError(f"{name}={raw!r} is not valid: {exc}") from exc


@dataclass(frozen=True)
class Settings:
    """Limits and tolerances used across the toolkit.

    Attributes:
        brute_force_max_vertices: Largest graph the exhaustive MaxCut oracle accepts.
        dense_max_qubits: Largest Hamiltonian solved with a dense eigensolver.
        eigensolver_max_qubits: Largest Hamiltonian solved at all.
        lanczos_krylov_dim: Krylov subspace size for the sparse eigensolver.
        lanczos_max_restarts: Restart cap for the sparse eigensolver.
        eigen_tol: Default eigenvalue tolerance.
        pauli_zero_tol: Threshold below which a Pauli expectation counts as zero.
        data_dir: Directory holding fixtures and the ply specification.
        log_level: Level name for the ``qrao`` logger.
        log_format: ``json`` or ``text``.
    """

    brute_force_max_vertices: int = 26
    dense_max_qubits: int = 10
    eigensolver_max_qubits: int = 24
    lanczos_krylov_dim: int = 64
    lanczos_max_restarts: int = 50
    eigen_tol: float = 1e-10
    pauli_zero_tol: float = 1e-9
    data_dir: Path = field(default_factory=lambda: PROJECT_ROOT / "data")
    log_level: str = "INFO"
    log_format: str = "json"

    def __post_init__(self):
        if self.brute_force_max_vertices < 1:
            raise InvalidArgumentError("brute_force_max_vertices must be positive")
        if not 1 <= self.dense_max_qubits <= self.eigensolver_max_qubits:
            raise InvalidArgumentError(
                "need 1 <= dense_max_qubits <= eigensolver_max_qubits"
            )
        if self.lanczos_krylov_dim < 2 or self.lanczos_max_restarts < 1:
            raise InvalidArgumentError("Lanczos dimensions must be positive")
        if self.eigen_tol <= 0 or self.pauli_zero_tol < 0:
            raise InvalidArgumentError("tolerances must be positive")
        if self.log_format not in ("json", "text"):
            raise InvalidArgumentError(f"unknown log format {self.log_format!r}")

    @classmethod
    def from_env(cls, env_file: Path = PROJECT_ROOT / ".env") -> "Settings":
        """Build settings from ``QRAO_*`` variables, loading ``env_file`` first."""
        load_dotenv(dotenv_path=env_file)
        defaults = cls()
        return cls(
            brute_force_max_vertices=_env(
                "QRAO_BRUTE_FORCE_MAX_VERTICES", defaults.brute_force_max_vertices, int
            ),
            dense_max_qubits=_env("QRAO_DENSE_MAX_QUBITS", defaults.dense_max_qubits, int),
            eigensolver_max_qubits=_env(
                "QRAO_EIGENSOLVER_MAX_QUBITS", defaults.eigensolver_max_qubits, int
            ),
            lanczos_krylov_dim=_env(
                "QRAO_LANCZOS_KRYLOV_DIM", defaults.lanczos_krylov_dim, int
            ),
            lanczos_max_restarts=_env(
                "QRAO_LANCZOS_MAX_RESTARTS", defaults.lanczos_max_restarts, int
            ),
            eigen_tol=_env("QRAO_EIGEN_TOL", defaults.eigen_tol, float),
            pauli_zero_tol=_env("QRAO_PAULI_ZERO_TOL", defaults.pauli_zero_tol, float),
            data_dir=_env("QRAO_DATA_DIR", defaults.data_dir, Path),
            log_level=_env("QRAO_LOG_LEVEL", defaults.log_level, str).upper(),
            log_format=_env("QRAO_LOG_FORMAT", defaults.log_format, str).lower(),
        )
