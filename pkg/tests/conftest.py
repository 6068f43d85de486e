import pytest

from interleavings import IntervalModule, PersistenceModule


@pytest.fixture
def ex31():
    """Two-summand modules used in the worked variety examples."""
    M = PersistenceModule.of(("1", "4"), ("1.2", "3.9"), name="M")
    N = PersistenceModule.of(("1", "4"), ("0.9", "4.1"), name="N")
    return M, N


@pytest.fixture
def origin1():
    return IntervalModule.of(6, 8), IntervalModule.of(1, 2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
