import pytest

from fthresh import Ideal, RingContext


def ring(p, names="xyz", order="grevlex"):
    return RingContext(p, tuple(names), order)


def ideal(S, text):
    return Ideal.parse(S, text)


@pytest.fixture
def S5():
    return ring(5)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[cid])
