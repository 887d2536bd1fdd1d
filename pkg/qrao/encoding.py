"""
Quantum random access code embedding of MaxCut.

Each color class of a proper coloring gets its own block of qubits; up to ``d``
vertices of one color share a qubit, each on a different Pauli axis. Because the two
endpoints of an edge always sit in different blocks, every edge becomes a weight-2
Pauli term and the relaxed Hamiltonian reproduces the cut on embedded states.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from qrao.errors import InternalInvariantError, InvalidArgumentError, ParseError
from qrao.graph import Coloring, Graph, as_assignment
from qrao.logging_utils import get_logger
from qrao.pauli import Axis, PauliString, apply_pauli, expectation, multiply, single_axis_pauli
from qrao.statevector import Statevector, bloch_state, product_state

logger = get_logger(__name__)

DEFORMATION_AXES: Dict[int, Tuple[Axis, ...]] = {
    1: (Axis.Z,),
    2: (Axis.X, Axis.Z),
    3: (Axis.X, Axis.Y, Axis.Z),
}

Term = Tuple[float, PauliString]


def check_deformation(d: int) -> int:
    if d not in DEFORMATION_AXES:
        raise InvalidArgumentError(f"deformation must be 1, 2 or 3, got {d}")
    return d


@dataclass(frozen=True)
class VertexSlot:
    qubit: int
    axis: Axis


@dataclass(frozen=True)
class VertexPauliMap:
    """
    Placement of every vertex on a (qubit, axis) slot.

    Attributes:
        d: Deformation (vertices per qubit).
        num_qubits: Total qubit count, the sum over colors of ceil(|V_c| / d).
        slot_of: Slot of each vertex, indexed by vertex.
        qubit_vertices: Vertices on each qubit, in axis order.
        qubit_color: Color block each qubit belongs to.
    """

    d: int
    num_qubits: int
    slot_of: Tuple[VertexSlot, ...]
    qubit_vertices: Tuple[Tuple[int, ...], ...]
    qubit_color: Tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.slot_of)

    @property
    def axes(self) -> Tuple[Axis, ...]:
        return DEFORMATION_AXES[self.d]

    def pauli(self, vertex: int) -> PauliString:
        """The weight-1 operator P_v assigned to ``vertex``."""
        slot = self.slot_of[vertex]
        return single_axis_pauli(self.num_qubits, slot.qubit, slot.axis)


def assign_paulis(g: Graph, coloring: Coloring, d: int) -> VertexPauliMap:
    """
    Pack the vertices of each color densely onto qubits.

    Colors are processed in ascending order and vertices inside a color in ascending
    order; the vertex at in-color position ``i`` lands on qubit offset ``i // d`` of
    the color's block with axis ``axes[i % d]``.

    Raises:
        InvalidArgumentError: Bad deformation, or a coloring that is not proper for ``g``.
    """
    check_deformation(d)
    if not coloring.is_proper(g):
        raise InvalidArgumentError("coloring is not proper for this graph")

    axes = DEFORMATION_AXES[d]
    slots: List[Optional[VertexSlot]] = [None] * g.num_vertices
    qubit_vertices: List[Tuple[int, ...]] = []
    qubit_color: List[int] = []

    for color, members in enumerate(coloring.classes()):
        base = len(qubit_vertices)
        for offset in range(math.ceil(len(members) / d)):
            qubit_vertices.append(tuple(members[offset * d:(offset + 1) * d]))
            qubit_color.append(color)
        for position, vertex in enumerate(members):
            slots[vertex] = VertexSlot(base + position // d, axes[position % d])

    mapping = VertexPauliMap(
        d=d,
        num_qubits=len(qubit_vertices),
        slot_of=tuple(slots),
        qubit_vertices=tuple(qubit_vertices),
        qubit_color=tuple(qubit_color),
    )
    logger.debug(
        "assigned paulis",
        extra={"vertices": g.num_vertices, "qubits": mapping.num_qubits, "d": d},
    )
    return mapping


@dataclass(frozen=True)
class RelaxedHamiltonian:
    """
    ``constant * I + sum(coeff * P)`` over the stored terms.

    For Hamiltonians built from a graph the terms follow the graph's edge order.
    """

    num_qubits: int
    constant: float
    terms: Tuple[Term, ...]
    deformation: Optional[int] = None

    def __post_init__(self):
        for coeff, term in self.terms:
            if term.n != self.num_qubits:
                raise InvalidArgumentError(
                    f"term {term} acts on {term.n} qubits, Hamiltonian has {self.num_qubits}"
                )
            if not math.isfinite(coeff):
                raise InvalidArgumentError(f"non-finite coefficient for term {term}")
        object.__setattr__(self, "terms", tuple(self.terms))

    @property
    def spectral_bound(self) -> float:
        """Upper bound on the largest eigenvalue, ``constant + sum |coeff|``."""
        return self.constant + sum(abs(c) for c, _ in self.terms)


def build_hamiltonian(g: Graph, mapping: VertexPauliMap) -> RelaxedHamiltonian:
    """Relaxed Hamiltonian ``sum_e (w_e / 2)(I - d * P_u P_v)``."""
    if mapping.num_vertices != g.num_vertices:
        raise InvalidArgumentError(
            f"map covers {mapping.num_vertices} vertices, graph has {g.num_vertices}"
        )
    terms: List[Term] = []
    for u, v, w in g.edges:
        if mapping.slot_of[u].qubit == mapping.slot_of[v].qubit:
            raise InternalInvariantError(f"edge ({u}, {v}) endpoints share qubit")
        product, phase = multiply(mapping.pauli(u), mapping.pauli(v))
        if phase != 1:
            raise InternalInvariantError(f"edge ({u}, {v}) operator picked up phase {phase}")
        terms.append((-(mapping.d * w) / 2.0, product))
    return RelaxedHamiltonian(
        num_qubits=mapping.num_qubits,
        constant=g.total_weight / 2.0,
        terms=tuple(terms),
        deformation=mapping.d,
    )


def qubit_bloch_vectors(mapping: VertexPauliMap, m: Sequence[int]) -> np.ndarray:
    """
    Bloch vector of every qubit of the embedded state, shape ``(num_qubits, 3)``.

    Unused slots on a qubit act as variables fixed to +1.
    """
    spins = as_assignment(m, mapping.num_vertices)
    axes = mapping.axes
    vectors = np.zeros((mapping.num_qubits, 3))
    for qubit, vertices in enumerate(mapping.qubit_vertices):
        for position, axis in enumerate(axes):
            value = spins[vertices[position]] if position < len(vertices) else 1
            vectors[qubit] += value * axis.unit_vector
    return vectors / np.sqrt(mapping.d)


def embed_assignment(mapping: VertexPauliMap, m: Sequence[int]) -> Statevector:
    """Product state F(m) whose vertex expectations are ``m_v / sqrt(d)``."""
    vectors = qubit_bloch_vectors(mapping, m)
    return product_state([bloch_state(vector) for vector in vectors])


def apply_hamiltonian(h: RelaxedHamiltonian, amplitudes: np.ndarray) -> np.ndarray:
    """Matrix-free ``H |psi>`` on a raw amplitude vector."""
    out = h.constant * np.asarray(amplitudes, dtype=complex)
    for coeff, term in h.terms:
        out += coeff * apply_pauli(term, amplitudes)
    return out


def relaxed_energy(h: RelaxedHamiltonian, psi: Statevector) -> float:
    """``tr(H rho)`` for the pure state ``psi``."""
    if psi.num_qubits != h.num_qubits:
        raise InvalidArgumentError(
            f"Hamiltonian on {h.num_qubits} qubits, state on {psi.num_qubits}"
        )
    return h.constant + sum(coeff * expectation(term, psi) for coeff, term in h.terms)


def compression_ratio(mapping: VertexPauliMap) -> float:
    """Vertices per qubit."""
    if mapping.num_qubits == 0:
        return 0.0
    return mapping.num_vertices / mapping.num_qubits


def dump_hamiltonian(h: RelaxedHamiltonian) -> str:
    lines = [f"# qubits {h.num_qubits}"]
    if h.deformation is not None:
        lines.append(f"# deformation {h.deformation}")
    lines.append(f"constant {h.constant:.17g}")
    lines.extend(f"{coeff:.17g} {term}" for coeff, term in h.terms)
    return "\n".join(lines) + "\n"


def parse_hamiltonian(text: str, source: str = "<text>") -> RelaxedHamiltonian:
    """Inverse of :func:`dump_hamiltonian`."""
    num_qubits: Optional[int] = None
    deformation: Optional[int] = None
    constant: Optional[float] = None
    terms: List[Term] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.lstrip("#").split()
        try:
            if line.startswith("#"):
                if len(parts) == 2 and parts[0] == "qubits":
                    num_qubits = int(parts[1])
                elif len(parts) == 2 and parts[0] == "deformation":
                    deformation = check_deformation(int(parts[1]))
                continue
            if len(parts) != 2:
                raise ParseError(f"expected two fields, got {line!r}", source, number)
            if parts[0] == "constant":
                constant = float(parts[1])
                continue
            term = PauliString.from_label(parts[1])
            coeff = float(parts[0])
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), source, number) from exc
        if num_qubits is None:
            num_qubits = term.n
        elif term.n != num_qubits:
            raise ParseError(f"term {parts[1]} has {term.n} qubits, expected {num_qubits}", source, number)
        terms.append((coeff, term))

    if constant is None:
        raise ParseError("missing 'constant' line", source)
    return RelaxedHamiltonian(
        num_qubits=num_qubits or 0,
        constant=constant,
        terms=tuple(terms),
        deformation=deformation,
    )
