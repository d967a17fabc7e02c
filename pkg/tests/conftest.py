import pytest

from rainbowrado import parse

# binary-function equations used across the property tests
GRID_TEXTS = [
    "y=x+1",
    "y=x+2",
    "y=x+3",
    "y=2*x",
    "y=2*x+1",
    "y=3*x+1",
    "y=x^2",
    "y=x^2+1",
    "y=x^3",
    "y=2*x^2+2",
    "y=x^2+x+1",
]

GRID = [parse(t) for t in GRID_TEXTS]


def first_n(eq):
    """Smallest n for which [n] contains a solution."""
    return eq.apply((eq.domain_floor,))


@pytest.fixture(params=GRID, ids=GRID_TEXTS)
def grid_eq(request):
    return request.param


# acceptance lines, printed in the terminal summary so plain `pytest` shows them
CRITERIA: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
