import json

import pytest

from qrao.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fixtures_listing(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0
    rows = json.loads(out)
    assert [row["name"] for row in rows] == ["G16", "G40", "G40W", "PETERSEN"]


def test_fixture_edge_list(capsys):
    code, out, _ = run(capsys, "fixtures", "petersen")
    assert code == 0
    assert out.splitlines()[0] == "# vertices 10"
    assert len(out.splitlines()) == 16


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "--fixture", "PETERSEN", "--samples", "20", "--seed", "3")
    assert code == 0
    report = json.loads(out)
    assert report["seed"] == 3
    assert report["optimal_cut"] == 12.0
    assert len(report["rounding"]["magic"]["cuts"]) == 20


def test_solve_csv_to_file(capsys, tmp_path):
    out_file = tmp_path / "cuts.csv"
    code, out, _ = run(
        capsys, "solve", "--fixture", "PETERSEN", "--samples", "5", "--format", "csv", "--out", str(out_file)
    )
    assert code == 0
    assert out == ""
    lines = out_file.read_text().splitlines()
    assert lines[0] == "method,sample,cut"
    assert len(lines) == 1 + 5 + 1


def test_encode_and_color(capsys):
    code, out, _ = run(capsys, "encode", "--fixture", "PETERSEN", "--d", "2")
    assert code == 0
    assert out.startswith("# qubits 6\n# deformation 2\nconstant 7.5\n")
    code, out, _ = run(capsys, "color", "--fixture", "PETERSEN", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "vertex,color,qubit,axis"
    assert len(out.splitlines()) == 11


def test_shadows_command(capsys):
    code, out, _ = run(capsys, "shadows", "--fixture", "PETERSEN", "--shots", "200", "--seed", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["shots"] == 200
    assert payload["exact_energy"] >= 12.0


def test_benchmark_command(capsys):
    code, out, _ = run(capsys, "benchmark", "--sizes", "6", "--graphs", "1", "--samples", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "size,graph_seed,method,gamma"
    assert len(lines) == 1 + 3 + 1


@pytest.mark.parametrize(
    "argv",
    [("solve",), ("solve", "--graph", "does-not-exist.txt"), ("solve", "--fixture", "PETERSEN", "--samples", "0")],
)
def test_invalid_input_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error:" in err


def test_size_limit_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("QRAO_DENSE_MAX_QUBITS", "2")
    monkeypatch.setenv("QRAO_EIGENSOLVER_MAX_QUBITS", "3")
    code, _, err = run(capsys, "solve", "--fixture", "PETERSEN")
    assert code == 3
    assert "error:" in err


def test_undecodable_graph_file_exit_code(capsys, tmp_path):
    path = tmp_path / "broken.txt"
    path.write_bytes(b"0 1 1\n\xfe\xff\n")
    code, _, err = run(capsys, "solve", "--graph", str(path))
    assert code == 2
    assert f"{path}:2" in err
