"""
Rounding relaxed states back to cuts.

Magic rounding measures every qubit in a randomly chosen basis whose states are
embedded assignments (the magic bases for d=3, the xi bases for d=2, Z for d=1) and
decodes the outcome. Pauli rounding takes the sign of every vertex operator's
expectation value.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from qrao.config import Settings
from qrao.encoding import RelaxedHamiltonian, VertexPauliMap, check_deformation, relaxed_energy
from qrao.errors import InvalidArgumentError
from qrao.graph import Assignment, Graph, cut_value
from qrao.logging_utils import get_logger
from qrao.pauli import expectation
from qrao.statevector import (
    IDENTITY,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    Statevector,
    apply_1q_inplace,
    measure_qubit_inplace,
    rx,
    rz,
)

logger = get_logger(__name__)

# cos^2(t) = (1 + 1/sqrt(3)) / 2 and sin(2s) = 1/sqrt(2)
MAGIC_T = math.acos(math.sqrt((1 + 1 / math.sqrt(3)) / 2))
MAGIC_S = math.pi / 8

APPROXIMATION_BOUNDS = {1: 1.0, 2: 5 / 8, 3: 5 / 9}

_PREFIX = {"I": IDENTITY, "X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}
# Bloch sign pattern over (X, Y, Z) of the "+" state of each basis
_BASIS_TABLE = {
    1: (("I", (0, 0, 1)),),
    2: (("I", (1, 0, 1)), ("X", (1, 0, -1))),
    3: (("X", (1, -1, -1)), ("Y", (-1, 1, -1)), ("Z", (-1, -1, 1)), ("I", (1, 1, 1))),
}


@dataclass(frozen=True)
class RoundingBasis:
    """
    One measurement basis of the rounding channel.

    ``index`` is 1-based. Outcome ``s`` (+1 for |0>) decodes the variable on axis
    ``a`` to ``s * pattern[a]``.
    """

    index: int
    prefix: str
    pattern: Tuple[int, int, int]
    unitary: np.ndarray

    @property
    def bloch_vector(self) -> np.ndarray:
        vector = np.asarray(self.pattern, dtype=float)
        return vector / np.linalg.norm(vector)

    def decode(self, sign: int, axis_index: int) -> int:
        return sign * self.pattern[axis_index]


def rotation_to_z(bloch: Sequence[float]) -> np.ndarray:
    """Unitary ``e^{-itX} e^{-isZ}`` taking the pure state with Bloch vector ``bloch`` to |0>."""
    x, y, z = bloch
    t = 0.5 * math.acos(max(-1.0, min(1.0, z)))
    s = 0.5 * math.atan2(x, y) if (x or y) else 0.0
    return rx(2 * t) @ rz(2 * s)


@lru_cache(maxsize=None)
def rounding_bases(d: int) -> Tuple[RoundingBasis, ...]:
    """Bases of the rounding channel for deformation ``d``."""
    check_deformation(d)
    base_pattern = next(p for prefix, p in _BASIS_TABLE[d] if prefix == "I")
    base_vector = np.asarray(base_pattern, dtype=float) / math.sqrt(d)
    base_rotation = rotation_to_z(base_vector)
    bases = []
    for index, (prefix, pattern) in enumerate(_BASIS_TABLE[d], start=1):
        unitary = base_rotation @ _PREFIX[prefix]
        unitary.setflags(write=False)
        bases.append(RoundingBasis(index, prefix, pattern, unitary))
    return tuple(bases)


def magic_basis_unitary(i: int) -> np.ndarray:
    """
    ``U_i = e^{-itX} e^{-isZ} P_i`` with P = X, Y, Z, I for i = 1..4.

    ``U_i`` maps the magic state ``mu_i^+`` to |0> and ``mu_i^-`` to |1>.
    """
    if i not in (1, 2, 3, 4):
        raise InvalidArgumentError(f"magic basis index must be 1..4, got {i}")
    return np.array(rounding_bases(3)[i - 1].unitary)


def basis_density(basis: RoundingBasis, sign: int) -> np.ndarray:
    """Projector onto the ``sign`` state of ``basis``."""
    x, y, z = sign * basis.bloch_vector
    return 0.5 * (IDENTITY + x * PAULI_X + y * PAULI_Y + z * PAULI_Z)


@dataclass(frozen=True)
class RoundingSample:
    assignment: Assignment
    cut: float
    basis_choices: Tuple[Tuple[int, int], ...] = ()


def _check_dimensions(psi: Statevector, mapping: VertexPauliMap, g: Graph) -> None:
    if psi.num_qubits != mapping.num_qubits:
        raise InvalidArgumentError(
            f"state has {psi.num_qubits} qubits, encoding uses {mapping.num_qubits}"
        )
    if mapping.num_vertices != g.num_vertices:
        raise InvalidArgumentError("encoding and graph disagree on the vertex count")


def decode_qubit(
    mapping: VertexPauliMap, qubit: int, basis: RoundingBasis, sign: int, spins: np.ndarray
) -> None:
    """Write the decoded values of ``qubit``'s vertices into ``spins``."""
    for position, vertex in enumerate(mapping.qubit_vertices[qubit]):
        axis_index = "XYZ".index(mapping.axes[position].value)
        spins[vertex] = basis.decode(sign, axis_index)


def magic_round_once(
    psi: Statevector, mapping: VertexPauliMap, g: Graph, rng: np.random.Generator
) -> RoundingSample:
    """
    One draw from the rounding channel.

    Qubits are measured in ascending order; for each one a basis is drawn uniformly,
    then the outcome is sampled from the collapsed state.
    """
    _check_dimensions(psi, mapping, g)
    bases = rounding_bases(mapping.d)
    amplitudes = psi.copy_amplitudes()
    spins = np.ones(g.num_vertices, dtype=np.int8)
    choices = []
    for qubit in range(mapping.num_qubits):
        basis = bases[int(rng.integers(len(bases)))] if len(bases) > 1 else bases[0]
        apply_1q_inplace(amplitudes, mapping.num_qubits, qubit, basis.unitary)
        outcome = measure_qubit_inplace(amplitudes, mapping.num_qubits, qubit, rng)
        sign = 1 - 2 * outcome
        decode_qubit(mapping, qubit, basis, sign, spins)
        choices.append((basis.index, sign))
    return RoundingSample(spins, cut_value(g, spins), tuple(choices))


def magic_round_batch(
    psi: Statevector, mapping: VertexPauliMap, g: Graph, samples: int, seed: int
) -> Tuple[RoundingSample, np.ndarray]:
    """
    Repeat magic rounding ``samples`` times.

    Sample ``i`` uses the generator ``default_rng([seed, i])``.

    Returns:
        The best sample (earliest on ties) and every sample's cut.
    """
    if samples < 1:
        raise InvalidArgumentError("samples must be >= 1")
    best: Optional[RoundingSample] = None
    cuts = np.empty(samples)
    for i in range(samples):
        sample = magic_round_once(psi, mapping, g, np.random.default_rng([seed, i]))
        cuts[i] = sample.cut
        if best is None or sample.cut > best.cut:
            best = sample
    logger.debug(
        "magic rounding batch",
        extra={"samples": samples, "best_cut": best.cut, "mean_cut": float(cuts.mean())},
    )
    return best, cuts


def expected_rounded_energy(h: RelaxedHamiltonian, psi: Statevector, d: int) -> float:
    """
    Mean cut after magic rounding, ``constant + (E - constant) / d^2``.

    No sampling; follows from the channel shrinking every Bloch component by 1/d.
    """
    check_deformation(d)
    energy = relaxed_energy(h, psi)
    return h.constant + (energy - h.constant) / d**2


def expected_rounded_gain(h: RelaxedHamiltonian, psi: Statevector, d: int) -> float:
    """MaxCutGain of the rounded distribution, equal to the relaxed gain over d^2."""
    total = 2 * h.constant
    if total <= 0:
        raise InvalidArgumentError("MaxCutGain needs a positive total edge weight")
    return expected_rounded_energy(h, psi, d) / total - 0.5


def pauli_round(
    psi: Statevector,
    mapping: VertexPauliMap,
    g: Graph,
    zero_tol: Optional[float] = None,
    rng: Optional[np.random.Generator] = None,
) -> RoundingSample:
    """
    Set every vertex to the sign of ``<P_v>``; values within ``zero_tol`` of zero get a
    fair coin from ``rng``.
    """
    _check_dimensions(psi, mapping, g)
    zero_tol = Settings.from_env().pauli_zero_tol if zero_tol is None else zero_tol
    rng = rng if rng is not None else np.random.default_rng(0)
    spins = np.empty(g.num_vertices, dtype=np.int8)
    ties = 0
    for vertex in range(g.num_vertices):
        value = expectation(mapping.pauli(vertex), psi)
        if abs(value) > zero_tol:
            spins[vertex] = 1 if value > 0 else -1
        else:
            spins[vertex] = 1 if rng.random() < 0.5 else -1
            ties += 1
    if ties:
        logger.debug("pauli rounding coin flips", extra={"vertices": ties})
    return RoundingSample(spins, cut_value(g, spins))


def approximation_ratio(cut: float, optimal: float) -> float:
    if optimal <= 0:
        raise InvalidArgumentError(f"optimal cut must be positive, got {optimal}")
    return cut / optimal


def magic_bound(d: int) -> float:
    """Worst-case expected approximation ratio of magic rounding from a maximal state."""
    check_deformation(d)
    return APPROXIMATION_BOUNDS[d]


def rounding_report(
    method: str,
    cuts: Sequence[float],
    best: RoundingSample,
    optimal_cut: Optional[float] = None,
) -> Dict[str, Any]:
    """JSON-ready summary of a rounding run."""
    cuts = [float(c) for c in cuts]
    report: Dict[str, Any] = {
        "method": method,
        "samples": len(cuts),
        "cuts": cuts,
        "best_cut": float(best.cut),
        "best_assignment": [int(v) for v in best.assignment],
        "mean_gamma": None,
    }
    if optimal_cut is not None and optimal_cut > 0:
        report["mean_gamma"] = float(np.mean(cuts)) / optimal_cut
        report["optimal_cut"] = float(optimal_cut)
    return report


def rounding_distribution(cuts: np.ndarray) -> List[Tuple[float, int]]:
    """Histogram of cut values as (cut, count) pairs in ascending cut order."""
    values, counts = np.unique(np.asarray(cuts), return_counts=True)
    return [(float(v), int(c)) for v, c in zip(values, counts)]
