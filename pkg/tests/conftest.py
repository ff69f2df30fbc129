import pytest

from g2crystal.cartan import Weight

SUITE = [Weight(1, 0), Weight(0, 1), Weight(2, 0), Weight(0, 2), Weight(1, 1), Weight(2, 2), Weight(1, 3)]
SMALL = [Weight(1, 0), Weight(0, 1), Weight(2, 0), Weight(0, 2), Weight(1, 1)]

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=SUITE, ids=str)
def lam(request):
    return request.param
