import pytest

from extverts import cache

ACCEPTANCE_LINES = []


@pytest.fixture(autouse=True, scope="session")
def _memory_cache():
    cache.configure(None)
    yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
