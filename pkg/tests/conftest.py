import numpy as np
import pytest

from hyperten import families
from hyperten.hypergraph import Hypergraph


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the assertion stays in the test."""
    def record(number, name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}" + (f" ({detail})" if detail else "")
        _ACCEPTANCE.append((number, line))
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE, key=lambda t: t[0]):
        terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture
def pendant():
    return families.pendant()


FIXTURES = {
    "K2": Hypergraph(2, ((1, 2),)),
    "P3": families.path(3),
    "C4": families.cycle(4),
    "star3": families.star(3),
    "pendant": families.pendant(),
    "K4_3": families.complete_uniform(4, 3),
    "mixed_12_1234": Hypergraph(4, ((1, 2), (1, 2, 3, 4))),
    "mixed_12_123": Hypergraph(3, ((1, 2), (1, 2, 3))),
    "C3": families.cycle(3),
    "two_triples": Hypergraph(4, ((1, 2, 3), (2, 3, 4))),
}


@pytest.fixture(params=sorted(FIXTURES))
def fixture_graph(request):
    return FIXTURES[request.param]
