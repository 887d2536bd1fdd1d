import numpy as np
import pytest

from qrao.encoding import assign_paulis, build_hamiltonian, relaxed_energy
from qrao.errors import InvalidArgumentError
from qrao.graph import brute_force_maxcut, ldf_coloring
from qrao.problems import fixture
from qrao.simulator import AnsatzSpec, prepare_ansatz
from qrao.spsa import SpsaConfig
from qrao.vqe import initial_parameters, run_seed, vqe_multistart, vqe_relax


def hamiltonian_of(g, d=3):
    return build_hamiltonian(g, assign_paulis(g, ldf_coloring(g), d))


def test_initial_parameters_are_seeded_angles():
    spec = AnsatzSpec(3, 2)
    params = initial_parameters(spec, 4)
    assert params.shape == (18,)
    assert np.all(np.abs(params) <= np.pi)
    assert np.array_equal(params, initial_parameters(spec, 4))


def test_vqe_reports_best_state(single_edge):
    h = hamiltonian_of(single_edge)
    result = vqe_relax(h, AnsatzSpec(2, 1), SpsaConfig(iterations=100, seed=2))
    assert result.energy == pytest.approx(max(result.trace), abs=1e-9)
    assert result.energy >= result.trace[0]
    assert result.energy <= 2.0 + 1e-9
    assert relaxed_energy(h, prepare_ansatz(AnsatzSpec(2, 1), result.params)) == pytest.approx(
        result.energy
    )


def test_vqe_qubit_mismatch(single_edge):
    with pytest.raises(InvalidArgumentError):
        vqe_relax(hamiltonian_of(single_edge), AnsatzSpec(3, 1), SpsaConfig(iterations=1))


def test_multistart_uses_distinct_seeds(single_edge):
    h = hamiltonian_of(single_edge)
    results = vqe_multistart(h, AnsatzSpec(2, 1), SpsaConfig(iterations=5, seed=1), runs=3)
    assert len(results) == 3
    assert len({run_seed(1, i) for i in range(3)}) == 3
    assert not np.array_equal(results[0].optimizer.trace, results[1].optimizer.trace)


@pytest.mark.slow
def test_g16_depth_two_vqe_reaches_optimal_cut():
    g = fixture("G16")
    h = hamiltonian_of(g)
    _, best = brute_force_maxcut(g, 26)
    results = vqe_multistart(h, AnsatzSpec(h.num_qubits, 2), SpsaConfig(iterations=500), runs=10)
    reached = sum(r.energy >= best for r in results)
    assert reached >= 7
