import pytest

from qschubert.partitions import GrassmannianContext

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def box22():
    return GrassmannianContext(2, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
