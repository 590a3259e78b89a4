import math

import pytest

from hsbound.config import RunConfig
from hsbound.gtable import GTildeTable, build_gtable

G2_PAIR = 3 * math.sqrt(3) / (4 * math.pi)
# paper's displayed values, g~_2(5) taken at its stated upper bound
PAPER_D2 = [1.0, 1.0, G2_PAIR, 0.0589, 0.0013, 0.0001]
PAPER_A = math.sqrt(8 * math.pi / (3 * math.sqrt(3)))

_ACCEPTANCE = []


@pytest.fixture
def paper_table():
    return GTildeTable.from_values(2, PAPER_D2, note="paper values")


@pytest.fixture(scope="session")
def d2_table():
    """Full default-budget d=2 reproduction (10^7 samples per k)."""
    return build_gtable(RunConfig(d=2))


@pytest.fixture(scope="session")
def small_d2_table():
    return build_gtable(RunConfig(d=2, samples_per_k=200_000, chunk_size=20_000, master_seed=3))


@pytest.fixture
def record():
    """Log one acceptance line; printed in the terminal summary."""
    def _record(label, ok, detail):
        _ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
