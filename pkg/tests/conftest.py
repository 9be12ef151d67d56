import pytest

from lowgarside.coxeter import catalog
from lowgarside.low import enumerate_low, smallest_family
from lowgarside.weak_order import CoxeterGroup

_cache = {}


def build(type_name, rank=None, bond=None, edges=None):
    """Group, low set and family for a catalog system, shared across tests."""
    key = (type_name, rank, bond, tuple(map(tuple, edges or ())))
    if key not in _cache:
        group = CoxeterGroup(catalog(type_name, rank, bond, edges))
        low = enumerate_low(group)
        _cache[key] = (group, low, smallest_family(low, record_joins=True))
    return _cache[key]


@pytest.fixture
def A2():
    return build("A", 2)


@pytest.fixture
def At2():
    return build("affineA", 2)


@pytest.fixture
def Ct2():
    return build("affineC", 2)


@pytest.fixture
def Ainf():
    return build("I2", bond=float("inf"))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
