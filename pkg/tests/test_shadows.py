import numpy as np
import pytest

from qrao.encoding import assign_paulis, build_hamiltonian, embed_assignment
from qrao.errors import InvalidArgumentError, UnsupportedOperationError
from qrao.graph import Graph, cut_value, ldf_coloring
from qrao.pauli import PauliString, expectation
from qrao.shadows import (
    SampleBudget,
    ShadowRecords,
    collect_shadows,
    estimate_embedded_cut,
    estimate_hamiltonian,
    estimate_pauli,
    samples_additive,
    samples_embedded,
    samples_multiplicative,
    samples_per_edge,
    single_shot_estimates,
)
from qrao.simulator import extremal_eigenstate
from qrao.statevector import Statevector
from tests.helpers import random_assignment, random_state


def encode(g, d=3):
    mapping = assign_paulis(g, ldf_coloring(g), d)
    return mapping, build_hamiltonian(g, mapping)


def test_sample_counts():
    # ln(2 * 15 / 0.1) = ln 300
    assert samples_embedded(15, 0.1) == 925
    assert samples_multiplicative(SampleBudget(0.5, 0.1, 15)) == 3697
    assert samples_additive(1.0, 0.1, 15) == 51976
    assert samples_per_edge(0.5, 0.1, 15) == 411


def test_sample_counts_grow_with_edges_and_confidence():
    assert samples_embedded(60, 0.1) > samples_embedded(15, 0.1)
    assert samples_embedded(15, 0.01) > samples_embedded(15, 0.1)


@pytest.mark.parametrize("delta, edges", [(0.0, 5), (1.0, 5), (0.1, 0)])
def test_budget_validation(delta, edges):
    with pytest.raises(InvalidArgumentError):
        samples_embedded(edges, delta)


def test_fixed_basis_records():
    records = collect_shadows(Statevector.zero(2), shots=10, seed=0, bases=[2, 2])
    assert np.all(records.outcomes == 1)
    assert estimate_pauli(records, PauliString.from_label("ZZ")) == 9.0
    assert estimate_pauli(records, PauliString.from_label("XI")) == 0.0


def test_collection_is_seeded(rng):
    psi = Statevector.from_amplitudes(rng.normal(size=8), normalize=True)
    first = collect_shadows(psi, shots=50, seed=3)
    second = collect_shadows(psi, shots=50, seed=3)
    assert np.array_equal(first.bases, second.bases)
    assert np.array_equal(first.outcomes, second.outcomes)
    assert first.bases.shape == (50, 3)


def test_single_qubit_estimate_is_unbiased():
    records = collect_shadows(Statevector.zero(2), shots=30000, seed=5)
    assert estimate_pauli(records, PauliString.from_label("ZI")) == pytest.approx(1.0, abs=0.05)
    assert estimate_pauli(records, PauliString.from_label("IX")) == pytest.approx(0.0, abs=0.05)


def test_energy_estimate_single_edge(single_edge, settings):
    _, h = encode(single_edge)
    psi, energy = extremal_eigenstate(h, settings=settings)
    records = collect_shadows(psi, shots=20000, seed=8)
    assert estimate_hamiltonian(records, h) == pytest.approx(energy, abs=0.2)


def test_multiplicative_budget_on_petersen(petersen, settings):
    _, h = encode(petersen)
    psi, energy = extremal_eigenstate(h, settings=settings)
    shots = samples_multiplicative(SampleBudget(0.5, 0.1, petersen.num_edges))
    records = collect_shadows(psi, shots=shots, seed=13)
    assert abs(estimate_hamiltonian(records, h) - energy) <= 0.5 * energy


def test_embedded_cut_recovery(petersen, rng):
    mapping, _ = encode(petersen)
    m = random_assignment(petersen.num_vertices, rng)
    shots = samples_embedded(petersen.num_edges, 0.01)
    records = collect_shadows(embed_assignment(mapping, m), shots=shots, seed=21)
    assert estimate_embedded_cut(records, petersen, mapping) == cut_value(petersen, m)


def test_weight_limit_and_empty_records():
    records = collect_shadows(Statevector.zero(3), shots=4, seed=0)
    with pytest.raises(UnsupportedOperationError):
        single_shot_estimates(records, PauliString.from_label("XXX"))
    empty = ShadowRecords(np.zeros((0, 3)), np.zeros((0, 3)))
    with pytest.raises(InvalidArgumentError):
        estimate_pauli(empty, PauliString.from_label("XII"))


def test_records_table(tmp_path):
    records = collect_shadows(Statevector.zero(2), shots=6, seed=2)
    frame = records.to_frame()
    assert list(frame.columns) == ["shot", "qubit", "basis", "outcome"]
    assert len(frame) == 12
    path = records.write_csv(tmp_path / "shadows.csv")
    loaded = ShadowRecords.read_csv(path)
    assert np.array_equal(loaded.bases, records.bases)
    assert np.array_equal(loaded.outcomes, records.outcomes)


def test_records_validation():
    with pytest.raises(InvalidArgumentError):
        ShadowRecords(np.zeros((2, 2)), np.zeros((2, 2)))
    with pytest.raises(InvalidArgumentError):
        ShadowRecords(np.full((1, 2), 3), np.ones((1, 2)))


@pytest.fixture
def complete_four():
    return Graph(4, [(u, v, 1.0) for u in range(4) for v in range(u + 1, 4)])


def test_multiplicative_accuracy_across_trials(complete_four, settings):
    mapping, h = encode(complete_four)
    assert mapping.num_qubits == 4
    psi, energy = extremal_eigenstate(h, settings=settings)
    shots = samples_multiplicative(SampleBudget(0.3, 0.1, complete_four.num_edges))
    hits = sum(
        abs(estimate_hamiltonian(collect_shadows(psi, shots=shots, seed=trial), h) - energy) < 0.3 * energy
        for trial in range(100)
    )
    assert hits >= 90


def test_embedded_cut_recovery_across_trials(complete_four):
    mapping, _ = encode(complete_four)
    rng = np.random.default_rng(77)
    shots = samples_embedded(complete_four.num_edges, 0.05)
    recovered = 0
    for trial in range(100):
        m = random_assignment(4, rng)
        records = collect_shadows(embed_assignment(mapping, m), shots=shots, seed=1000 + trial)
        recovered += estimate_embedded_cut(records, complete_four, mapping) == cut_value(complete_four, m)
    assert recovered >= 95


TWO_QUBIT_LABELS = [a + b for a in "XYZ" for b in "XYZ"]


def test_two_qubit_estimates_are_unbiased(rng):
    psi = random_state(2, rng)
    records = collect_shadows(psi, shots=100_000, seed=31)
    for label in TWO_QUBIT_LABELS:
        p = PauliString.from_label(label)
        assert estimate_pauli(records, p) == pytest.approx(expectation(p, psi), abs=0.05)


def test_single_shot_magnitude_is_at_most_nine(rng):
    records = collect_shadows(random_state(2, rng), shots=2000, seed=4)
    labels = TWO_QUBIT_LABELS + ["XI", "YI", "ZI", "IX", "IY", "IZ"]
    for label in labels:
        assert np.abs(single_shot_estimates(records, PauliString.from_label(label))).max() <= 9.0
