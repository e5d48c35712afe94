import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hecke_bn.kl import get_table  # noqa: E402
from hecke_bn.laurent import ASYMPTOTIC, WEIGHTED_11  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def t2():
    return get_table(2, ASYMPTOTIC)


@pytest.fixture(scope="session")
def t3():
    return get_table(3, ASYMPTOTIC)


@pytest.fixture(scope="session")
def t3w():
    return get_table(3, WEIGHTED_11)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
