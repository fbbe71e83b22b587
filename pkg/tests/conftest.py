import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from otau.core.params import TauParams

# exact arithmetic is slow; keep example counts modest and drop the deadline
settings.register_profile("exact", deadline=None, max_examples=30,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")


@pytest.fixture
def numeric():
    return TauParams.numeric(Fraction(2, 7), Fraction(3, 11))


@pytest.fixture
def symbolic():
    return TauParams.symbolic_z()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
