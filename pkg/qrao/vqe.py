"""
Variational preparation of high-energy relaxed states.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

import numpy as np

from qrao.encoding import RelaxedHamiltonian, relaxed_energy
from qrao.errors import InvalidArgumentError
from qrao.logging_utils import get_logger
from qrao.simulator import AnsatzSpec, prepare_ansatz
from qrao.spsa import SpsaConfig, SpsaResult, spsa_maximize
from qrao.statevector import Statevector

logger = get_logger(__name__)


@dataclass
class VqeResult:
    state: Statevector
    energy: float
    params: np.ndarray
    optimizer: SpsaResult

    @property
    def trace(self) -> List[float]:
        return self.optimizer.trace


def initial_parameters(spec: AnsatzSpec, seed: int) -> np.ndarray:
    """Angles drawn uniformly from [-pi, pi]."""
    rng = np.random.default_rng([seed, 0])
    return rng.uniform(-np.pi, np.pi, size=spec.num_parameters)


def vqe_relax(
    h: RelaxedHamiltonian,
    spec: AnsatzSpec,
    config: SpsaConfig,
    initial: Optional[Sequence[float]] = None,
) -> VqeResult:
    """
    Maximize the relaxed energy over the ansatz with SPSA.

    Args:
        h: Relaxed Hamiltonian.
        spec: Ansatz shape; its qubit count must match ``h``.
        config: Optimizer settings, including the seed.
        initial: Start parameters; drawn from ``config.seed`` when omitted.

    Returns:
        The state at the best parameters seen, its energy and the optimizer record.
    """
    if spec.num_qubits != h.num_qubits:
        raise InvalidArgumentError(
            f"ansatz has {spec.num_qubits} qubits, Hamiltonian has {h.num_qubits}"
        )
    start = initial_parameters(spec, config.seed) if initial is None else np.asarray(initial)

    def objective(params: np.ndarray) -> float:
        return relaxed_energy(h, prepare_ansatz(spec, params))

    optimized = spsa_maximize(objective, config, start)
    state = prepare_ansatz(spec, optimized.best_params)
    energy = relaxed_energy(h, state)
    logger.debug(
        "vqe finished",
        extra={"qubits": spec.num_qubits, "depth": spec.depth, "energy": energy},
    )
    return VqeResult(state=state, energy=energy, params=optimized.best_params, optimizer=optimized)


def run_seed(seed: int, run_index: int) -> int:
    """Seed of run ``run_index`` derived from the base seed."""
    return int(np.random.SeedSequence([seed, run_index]).generate_state(1)[0])


def vqe_multistart(
    h: RelaxedHamiltonian,
    spec: AnsatzSpec,
    config: SpsaConfig,
    runs: int,
    workers: int = 1,
) -> List[VqeResult]:
    """Independent VQE runs, ordered by run index."""
    if runs < 1:
        raise InvalidArgumentError("runs must be >= 1")
    configs = [replace(config, seed=run_seed(config.seed, i)) for i in range(runs)]
    if workers <= 1:
        return [vqe_relax(h, spec, c) for c in configs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(vqe_relax, [h] * runs, [spec] * runs, configs))
