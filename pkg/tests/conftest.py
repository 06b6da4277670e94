import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pntverify.primes import sieve_primes  # noqa: E402


@pytest.fixture(scope="session")
def table_1e6():
    return sieve_primes(10**6)


@pytest.fixture(scope="session")
def small_table():
    return sieve_primes(20_000)


def pytest_terminal_summary(terminalreporter):
    import sys as _sys

    mod = _sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
