import numpy as np

from qrao.statevector import Statevector


def random_state(num_qubits: int, rng: np.random.Generator) -> Statevector:
    amplitudes = rng.normal(size=1 << num_qubits) + 1j * rng.normal(size=1 << num_qubits)
    return Statevector.from_amplitudes(amplitudes, normalize=True)


def random_assignment(num_vertices: int, rng: np.random.Generator) -> np.ndarray:
    return rng.choice(np.array([-1, 1], dtype=np.int8), size=num_vertices)
