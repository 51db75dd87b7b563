import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from reslat.corpus import KEYS, builtin_algebra  # noqa: E402
from reslat.enumeration import enumerate_residuated  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption(
        "--extended", action="store_true", default=False,
        help="run population checks at size 5 and the slow oracles",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "extended: only with --extended")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def extended(request):
    return request.config.getoption("--extended")


@pytest.fixture(scope="session")
def corpus_algebras():
    return {k: builtin_algebra(k) for k in KEYS}


def population(max_size):
    out = []
    for n in range(1, max_size + 1):
        out.extend(enumerate_residuated(n))
    return out


@pytest.fixture(scope="session")
def population_small():
    """Every residuated lattice with at most four elements."""
    return population(4)


@pytest.fixture(scope="session")
def population_default(extended):
    """Sizes up to five, or six with --extended."""
    if not extended:
        return population(5)
    os.environ.setdefault("RESLAT_SIZE_CAP", "6")
    return population(6)
