import random

import pytest

from dkh import fixture


@pytest.fixture
def rng():
    return random.Random(20240)


@pytest.fixture(params=["U0", "K21", "TRP", "TRN", "KISH", "K37", "T43V"])
def knot(request):
    return request.param, fixture(request.param)



# criterion number -> printed lines, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[int, list[str]] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            for line in ACCEPTANCE_LINES[number]:
                terminalreporter.write_line(line)
