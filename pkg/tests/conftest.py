import time

import pytest

from nf_forge.cardinals import Arithmetic
from nf_forge.universe import Universe

#: Lines printed by the acceptance suite, repeated in the terminal summary.
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def U3():
    return Universe(3, 2)


@pytest.fixture(scope="session")
def A3(U3):
    return Arithmetic(U3)


@pytest.fixture(scope="session")
def catalog_n3():
    """The full catalog at n=3, single-threaded, with its wall-clock time."""
    from nf_forge.harness import run_catalog

    t0 = time.perf_counter()
    report = run_catalog(Universe(3, 2), jobs=1)
    return report, time.perf_counter() - t0


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
