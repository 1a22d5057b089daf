import pytest

from rrtri.curve import Point
from rrtri.transform import RatioTarget, curve_for

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}

E7_POINT = Point("29/169", "6902/2197")
# integral egg points, found by the egg sieve at e = 1
E26_EGG = Point(-1715, 50960)
E74_EGG = Point(-19683, 863136)


@pytest.fixture
def e7():
    return curve_for(RatioTarget.integer(7))


@pytest.fixture
def e26():
    return curve_for(RatioTarget.integer(26))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
