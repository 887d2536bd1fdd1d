import logging

import numpy as np
import pytest

from qrao.config import Settings
from qrao.graph import Graph
from qrao.logging_utils import ROOT_LOGGER
from qrao.problems import fixture


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def petersen():
    return fixture("PETERSEN")


@pytest.fixture
def single_edge():
    return Graph(2, [(0, 1, 1.0)])


@pytest.fixture
def weighted_triangle():
    return Graph(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)])


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(autouse=True)
def reset_package_logger():
    yield
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
