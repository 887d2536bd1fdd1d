"""
Classical shadows with uniformly random single-qubit Pauli measurements, the
estimators built on them and the sample counts that make those estimators reliable.
"""

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np
import numpy.typing as npt
import pandas as pd

from qrao.encoding import RelaxedHamiltonian, VertexPauliMap
from qrao.errors import InvalidArgumentError, UnsupportedOperationError
from qrao.graph import Graph
from qrao.logging_utils import get_logger
from qrao.pauli import PauliString, multiply
from qrao.statevector import HADAMARD, S_DAGGER, Statevector, apply_1q_inplace

logger = get_logger(__name__)

BASIS_LETTERS = "XYZ"
SHADOW_COLUMNS = ["shot", "qubit", "basis", "outcome"]
# inverse of the measurement channel, per qubit
INVERSE_CHANNEL = 3.0

_TO_Z = (HADAMARD, HADAMARD @ S_DAGGER, None)


@dataclass(frozen=True)
class ShadowRecords:
    """
    Per-shot, per-qubit measurement bases (0/1/2 for X/Y/Z) and outcomes (+1/-1),
    both shaped ``(shots, qubits)``.
    """

    bases: npt.NDArray[np.int8]
    outcomes: npt.NDArray[np.int8]

    def __post_init__(self):
        bases = np.asarray(self.bases, dtype=np.int8)
        outcomes = np.asarray(self.outcomes, dtype=np.int8)
        if bases.ndim != 2 or bases.shape != outcomes.shape:
            raise InvalidArgumentError("bases and outcomes must share a (shots, qubits) shape")
        if bases.size and (bases.min() < 0 or bases.max() > 2):
            raise InvalidArgumentError("basis codes must be 0, 1 or 2")
        if not np.all(np.abs(outcomes) == 1):
            raise InvalidArgumentError("outcomes must be -1 or +1")
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "outcomes", outcomes)

    @property
    def num_shots(self) -> int:
        return self.bases.shape[0]

    @property
    def num_qubits(self) -> int:
        return self.bases.shape[1]

    def to_frame(self) -> pd.DataFrame:
        """Long format, one row per (shot, qubit)."""
        shots, qubits = np.meshgrid(
            np.arange(self.num_shots), np.arange(self.num_qubits), indexing="ij"
        )
        return pd.DataFrame(
            {
                "shot": shots.ravel(),
                "qubit": qubits.ravel(),
                "basis": np.array(list(BASIS_LETTERS))[self.bases.ravel()],
                "outcome": self.outcomes.ravel(),
            },
            columns=SHADOW_COLUMNS,
        )

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "ShadowRecords":
        missing = set(SHADOW_COLUMNS) - set(frame.columns)
        if missing:
            raise InvalidArgumentError(f"shadow table is missing columns {sorted(missing)}")
        frame = frame.sort_values(["shot", "qubit"])
        num_shots = int(frame["shot"].max()) + 1 if len(frame) else 0
        num_qubits = int(frame["qubit"].max()) + 1 if len(frame) else 0
        if len(frame) != num_shots * num_qubits:
            raise InvalidArgumentError("shadow table must have one row per (shot, qubit)")
        codes = frame["basis"].map({letter: i for i, letter in enumerate(BASIS_LETTERS)})
        if codes.isna().any():
            raise InvalidArgumentError("basis column must contain only X, Y or Z")
        return cls(
            codes.to_numpy().reshape(num_shots, num_qubits),
            frame["outcome"].to_numpy().reshape(num_shots, num_qubits),
        )

    def write_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False)
        return path

    @classmethod
    def read_csv(cls, path: Union[str, Path]) -> "ShadowRecords":
        return cls.from_frame(pd.read_csv(path))


def collect_shadows(
    psi: Statevector,
    shots: int,
    seed: int,
    bases: Optional[npt.ArrayLike] = None,
) -> ShadowRecords:
    """
    Measure ``shots`` copies of ``psi``, each qubit in a uniformly random Pauli basis.

    Args:
        psi: State to measure.
        shots: Number of state preparations.
        seed: Seed for basis choices and outcomes.
        bases: Optional fixed basis codes, shape ``(qubits,)`` or ``(shots, qubits)``.

    Returns:
        The measurement record.
    """
    if shots < 1:
        raise InvalidArgumentError("shots must be >= 1")
    n = psi.num_qubits
    rng = np.random.default_rng(seed)
    if bases is None:
        chosen = rng.integers(3, size=(shots, n), dtype=np.int8)
    else:
        chosen = np.broadcast_to(np.asarray(bases, dtype=np.int8), (shots, n)).copy()

    outcomes = np.empty((shots, n), dtype=np.int8)
    qubit_bits = np.arange(n)
    # shots sharing a basis row sample from the same rotated distribution
    settings, inverse = np.unique(chosen, axis=0, return_inverse=True)
    inverse = np.ravel(inverse)
    for row, setting in enumerate(settings):
        amplitudes = psi.copy_amplitudes()
        for qubit, code in enumerate(setting):
            if _TO_Z[code] is not None:
                apply_1q_inplace(amplitudes, n, qubit, _TO_Z[code])
        probabilities = np.abs(amplitudes) ** 2
        shot_ids = np.flatnonzero(inverse == row)
        drawn = rng.choice(probabilities.size, size=shot_ids.size, p=probabilities / probabilities.sum())
        outcomes[shot_ids] = 1 - 2 * ((drawn[:, None] >> qubit_bits) & 1)

    logger.debug("collected shadows", extra={"shots": shots, "qubits": n, "settings": len(settings)})
    return ShadowRecords(chosen, outcomes)


def _letter_code(p: PauliString, qubit: int) -> int:
    return BASIS_LETTERS.index(p.letter(qubit))


def single_shot_estimates(records: ShadowRecords, p: PauliString) -> np.ndarray:
    """
    Per-shot unbiased estimates of ``<p>``.

    A shot contributes the product of ``3 * outcome`` over the support of ``p`` when its
    basis matches ``p`` on every support qubit, and 0 otherwise.
    """
    if p.n != records.num_qubits:
        raise InvalidArgumentError(
            f"Pauli on {p.n} qubits, records cover {records.num_qubits} qubits"
        )
    if p.weight > 2:
        raise UnsupportedOperationError(f"estimators are limited to weight <= 2, got {p}")
    estimates = np.ones(records.num_shots)
    for qubit in p.support():
        matched = records.bases[:, qubit] == _letter_code(p, qubit)
        estimates *= np.where(matched, INVERSE_CHANNEL * records.outcomes[:, qubit], 0.0)
    return estimates


def estimate_pauli(records: ShadowRecords, p: PauliString) -> float:
    if records.num_shots == 0:
        raise InvalidArgumentError("cannot estimate from zero shots")
    return float(single_shot_estimates(records, p).mean())


def estimate_hamiltonian(records: ShadowRecords, h: RelaxedHamiltonian) -> float:
    """Shadow estimate of ``tr(H rho)``."""
    if records.num_shots == 0:
        raise InvalidArgumentError("cannot estimate from zero shots")
    return h.constant + sum(coeff * estimate_pauli(records, term) for coeff, term in h.terms)


def estimate_embedded_cut(records: ShadowRecords, g: Graph, mapping: VertexPauliMap) -> float:
    """
    Cut of an embedded assignment read off the signs of the estimated edge parities.
    """
    cut = 0.0
    for u, v, w in g.edges:
        term, _ = multiply(mapping.pauli(u), mapping.pauli(v))
        if estimate_pauli(records, term) < 0:
            cut += w
    return cut


@dataclass(frozen=True)
class SampleBudget:
    epsilon: float
    delta: float
    num_edges: int

    def __post_init__(self):
        _check_budget(self.delta, self.num_edges)
        if self.epsilon <= 0:
            raise InvalidArgumentError(f"epsilon must be positive, got {self.epsilon}")


def _check_budget(delta: float, num_edges: int) -> None:
    if not 0 < delta < 1:
        raise InvalidArgumentError(f"delta must lie in (0, 1), got {delta}")
    if num_edges < 1:
        raise InvalidArgumentError(f"need at least one edge, got {num_edges}")


def _union_log(delta: float, num_edges: int) -> float:
    return math.log(2 * num_edges / delta)


def samples_multiplicative(budget: SampleBudget) -> int:
    """Shots for multiplicative error ``epsilon`` with probability ``1 - delta``."""
    return math.ceil(2 * 3**4 / budget.epsilon**2 * _union_log(budget.delta, budget.num_edges))


def samples_additive(epsilon: float, delta: float, num_edges: int) -> int:
    """Shots for additive error ``epsilon`` on ``tr(H rho)``."""
    budget = SampleBudget(epsilon, delta, num_edges)
    return math.ceil(
        3**4 / (2 * budget.epsilon**2) * num_edges**2 * _union_log(delta, num_edges)
    )


def samples_per_edge(kappa: float, delta: float, num_edges: int) -> int:
    """Shots for every edge parity to be within ``kappa`` simultaneously."""
    budget = SampleBudget(kappa, delta, num_edges)
    return math.ceil(2 * 3**2 / budget.epsilon**2 * _union_log(delta, num_edges))


def samples_embedded(num_edges: int, delta: float) -> int:
    """Shots to recover every edge parity of an embedded (d=3) state."""
    _check_budget(delta, num_edges)
    return math.ceil(2 * 3**4 * _union_log(delta, num_edges))
