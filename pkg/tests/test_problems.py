import pytest

from qrao.errors import InvalidArgumentError, NotFoundError, ParseError
from qrao.graph import brute_force_maxcut, cut_value
from qrao.problems import (
    FIXTURE_NAMES,
    REFERENCE_OPTIMA,
    REPORTED_ALTERNATING_G40W,
    PlySpec,
    alternating_assignment,
    composite_ply_spec,
    fixture,
    fixture_optimum,
    load_ply_spec,
    ply_to_graph,
)
from qrao.rounding import approximation_ratio


@pytest.mark.parametrize(
    "name, vertices, edges",
    [("G16", 16, 24), ("G40", 40, 60), ("G40W", 40, 68), ("PETERSEN", 10, 15)],
)
def test_fixture_sizes(name, vertices, edges):
    g = fixture(name)
    assert g.num_vertices == vertices
    assert g.num_edges == edges


@pytest.mark.parametrize("name", ["G16", "G40", "PETERSEN"])
def test_unweighted_fixtures_are_cubic(name):
    g = fixture(name)
    assert not g.is_weighted()
    assert all(g.degree(v) == 3 for v in range(g.num_vertices))


def test_fixture_lookup_is_case_insensitive():
    assert fixture("petersen") is fixture("PETERSEN")
    with pytest.raises(NotFoundError):
        fixture("G99")


def test_small_fixture_optima():
    for name in ("G16", "PETERSEN"):
        _, best = brute_force_maxcut(fixture(name), 26)
        assert best == REFERENCE_OPTIMA[name] == fixture_optimum(name)
    assert fixture_optimum("G40W") == 641.0
    assert fixture_optimum("nope") is None


def test_ply_graph_matches_fixture():
    spec = composite_ply_spec()
    assert spec.num_plies == 40
    assert len(spec.local_weights) == 39
    assert len(spec.non_local) == 29
    g = ply_to_graph(spec)
    assert sorted(g.edges) == sorted(fixture("G40W").edges)
    assert g.total_weight == 735.0


def test_alternating_stack():
    m = alternating_assignment(4)
    assert list(m) == [1, -1, 1, -1]
    g = fixture("G40W")
    # the shipped constraint data gives 496; 503 is the published figure
    assert cut_value(g, alternating_assignment(40)) == 496.0
    assert approximation_ratio(REPORTED_ALTERNATING_G40W, 641.0) == pytest.approx(0.7847, abs=1e-4)


def test_ply_spec_validation():
    with pytest.raises(InvalidArgumentError):
        PlySpec(3, (1,))
    with pytest.raises(InvalidArgumentError):
        PlySpec(3, (1, 1), ((0, 1, 2),))
    with pytest.raises(InvalidArgumentError):
        PlySpec(3, (1, 0))
    assert PlySpec(3, (2, 3), ((0, 2, 1),)).constraints == ((0, 1, 2), (1, 2, 3), (0, 2, 1))


def test_load_ply_spec_errors(tmp_path):
    with pytest.raises(NotFoundError):
        load_ply_spec(tmp_path / "missing.yaml")
    bad = tmp_path / "bad.yaml"
    bad.write_text("num_plies: [oops\n")
    with pytest.raises(ParseError):
        load_ply_spec(bad)
    incomplete = tmp_path / "incomplete.yaml"
    incomplete.write_text("num_plies: 3\n")
    with pytest.raises(ParseError):
        load_ply_spec(incomplete)


def test_load_ply_spec(tmp_path):
    path = tmp_path / "stack.yaml"
    path.write_text("num_plies: 4\nlocal_weights: [1, 2, 3]\nnon_local:\n  - [0, 2, 5]\n")
    g = ply_to_graph(load_ply_spec(path))
    assert g.num_edges == 4
    _, best = brute_force_maxcut(g, 26)
    assert best == 10.0


def test_fixture_names_are_complete():
    assert set(FIXTURE_NAMES) == set(REFERENCE_OPTIMA)
