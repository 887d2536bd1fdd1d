import json
import logging

import pytest

from qrao.config import Settings
from qrao.errors import (
    ConvergenceError,
    InvalidArgumentError,
    NotFoundError,
    ParseError,
    QraoError,
    SizeLimitError,
)
from qrao.logging_utils import configure_logging, get_logger


def test_defaults():
    settings = Settings()
    assert settings.brute_force_max_vertices == 26
    assert settings.dense_max_qubits == 10
    assert settings.eigensolver_max_qubits == 24
    assert settings.data_dir.name == "data"


def test_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("QRAO_DENSE_MAX_QUBITS", "6")
    monkeypatch.setenv("QRAO_LOG_LEVEL", "debug")
    monkeypatch.setenv("QRAO_DATA_DIR", str(tmp_path))
    settings = Settings.from_env(env_file=tmp_path / "absent.env")
    assert settings.dense_max_qubits == 6
    assert settings.log_level == "DEBUG"
    assert settings.data_dir == tmp_path


def test_env_file_is_loaded(monkeypatch, tmp_path):
    monkeypatch.delenv("QRAO_BRUTE_FORCE_MAX_VERTICES", raising=False)
    env_file = tmp_path / ".env"
    env_file.write_text("QRAO_BRUTE_FORCE_MAX_VERTICES=12\n")
    assert Settings.from_env(env_file=env_file).brute_force_max_vertices == 12


def test_invalid_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("QRAO_EIGEN_TOL", "tiny")
    with pytest.raises(InvalidArgumentError):
        Settings.from_env(env_file=tmp_path / "absent.env")
    with pytest.raises(InvalidArgumentError):
        Settings(dense_max_qubits=30)
    with pytest.raises(InvalidArgumentError):
        Settings(log_format="xml")


def test_exit_codes():
    assert InvalidArgumentError("x").exit_code == 2
    assert ParseError("x", "f.txt", 3).exit_code == 2
    assert str(ParseError("bad", "f.txt", 3)) == "f.txt:3: bad"
    assert SizeLimitError("x").exit_code == 3
    assert ConvergenceError("x", 1e-3).exit_code == 4
    assert str(NotFoundError("missing")) == "missing"
    assert isinstance(NotFoundError("x"), QraoError)


def test_json_logging(capsys):
    configure_logging(Settings(log_level="INFO", log_format="json"))
    get_logger("tests").info("hello", extra={"qubits": 4})
    record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert record["message"] == "hello"
    assert record["qubits"] == 4
    assert record["name"] == "qrao.tests"


def test_reconfigure_keeps_one_handler():
    configure_logging(Settings(log_format="text"))
    logger = configure_logging(Settings(log_format="text", log_level="WARNING"))
    assert len(logger.handlers) == 1
    assert logger.level == logging.WARNING
    assert get_logger("qrao.pipeline").name == "qrao.pipeline"
