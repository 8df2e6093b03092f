from fractions import Fraction

import pytest

from tribin import DigitCode, TribinConfig

# acceptance criteria report here; printed once at the end of the session
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def cfg0():
    """s = 3, A_0 = {0, 1}, uniform weights on both sides, standard rule."""
    return TribinConfig.build(s=3, a0=(0, 1))


@pytest.fixture
def code3():
    return lambda pre, per: DigitCode.make(3, pre, per)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


F = Fraction
