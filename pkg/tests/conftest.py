import sys

import pytest

from powerful_aps.apsearch import enumerate_kfull

# witnesses in these tests carry terms with hundreds of thousands of digits
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(20_000_000)


@pytest.fixture(scope="session")
def squarefull_1e6():
    return enumerate_kfull(10**6)


@pytest.fixture(scope="session")
def squarefull_set_1e6(squarefull_1e6):
    return set(squarefull_1e6.tolist())


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)
