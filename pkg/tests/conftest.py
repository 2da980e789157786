import numpy as np
import pytest

from elhs import sample_lhs
from elhs.rng import RngStream


@pytest.fixture
def lhs_factory():
    """Build LHS(p, n) designs from an integer seed."""
    def make(p, n, seed=0):
        return sample_lhs(p, n, RngStream(seed))
    return make


@pytest.fixture
def fig1_design():
    """N=7, P=2 LHS whose 10-bin regrid has one overlapping pair in one dimension."""
    return sample_lhs(2, 7, RngStream(0))


@pytest.fixture
def random_rows():
    def make(n, p, seed):
        return np.random.default_rng(seed).random((n, p))
    return make


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(number, title, ok, detail)``."""
    lines = request.config.stash[_ACCEPTANCE_KEY]

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        lines.append((number, line))
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
