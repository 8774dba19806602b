import sys

import pytest
from hypothesis import settings

from cmreg.ring import QQ, PolyRing

settings.register_profile("cmreg", deadline=None, max_examples=100)
settings.load_profile("cmreg")


@pytest.fixture
def R2():
    return PolyRing(QQ, 2)


@pytest.fixture
def R3():
    return PolyRing(QQ, 3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
