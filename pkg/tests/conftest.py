import pytest

from hoprimes import sieve_core

from .oracles import primes_td


@pytest.fixture(scope="session")
def td_primes_1e4():
    return primes_td(10_000)


@pytest.fixture
def fresh_source():
    """A private PrimeSource with a tiny initial table, to exercise extension."""
    return sieve_core.PrimeSource(initial_bound=10)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
