import pytest

from srnt import constructions
from reference import KNOWN


@pytest.fixture(scope="session")
def design():
    return constructions.witt_design_22()


@pytest.fixture(scope="session")
def known_graphs(design):
    return {name: constructions.by_name(name) for name in KNOWN}


ACCEPTANCE_LOG: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LOG


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LOG, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
