import sys
import pytest
from fractions import Fraction as F

from rectbilliard import Generator, Side, Slope, TableSpec


@pytest.fixture
def gen():
    """Build an AB generator from rationals: gen(p0, slope, rho=1)."""
    def make(p0, slope, rho=1, side=Side.AB):
        return Generator(side, F(p0), Slope.rational(F(slope)), TableSpec(F(rho)))
    return make


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.report_lines():
            terminalreporter.write_line(line)
