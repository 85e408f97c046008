import pytest

from hyperturan.designs import steiner_triple_system, transversal_design
from hyperturan.hypercore import Hypergraph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def fano():
    return steiner_triple_system(7)


@pytest.fixture(scope="session")
def sts9():
    return steiner_triple_system(9)


@pytest.fixture(scope="session")
def td33():
    return transversal_design(3, 3)


@pytest.fixture
def loose_path():
    """Two triples sharing one vertex; degrees (1, 1, 2, 1, 1)."""
    return Hypergraph(5, 3, ((0, 1, 2), (2, 3, 4)))


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
