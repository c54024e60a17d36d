import pytest
from mpmath import mp

from invbinom.registry import builtin_catalog

ACCEPTANCE_LINES = []


@pytest.fixture(autouse=True)
def reference_precision():
    """Test-side reference arithmetic runs at 640 bits; library code sets its own."""
    with mp.workprec(640):
        yield


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
