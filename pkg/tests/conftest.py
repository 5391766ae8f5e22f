from fractions import Fraction as F

import pytest

from stirpoly import BernoulliCache, Poly, build_pk_sequence, build_stirling_table

# P_0 .. P_10 as listed in the paper, ascending coefficients.
PAPER_PK = [
    [1],
    [F(-1, 3), 1],
    [0, -1, 1],
    [F(2, 15), F(1, 3), -2, 1],
    [0, F(2, 3), F(5, 3), F(-10, 3), 1],
    [F(-16, 63), F(-2, 3), F(13, 9), 5, -5, 1],
    [0, F(-16, 9), F(-14, 3), F(7, 9), F(35, 3), -7, 1],
    [F(16, 15), F(404, 135), -4, F(-469, 27), F(-56, 9), F(70, 3), F(-28, 3), 1],
    [0, F(48, 5), F(404, 15), F(20, 3), F(-133, 3), F(-448, 15), 42, -12, 1],
    [F(-256, 33), F(-208, 9), F(188, 9), F(1072, 9), F(745, 9), F(-245, 3), F(-266, 3), 70, -15, 1],
    [0, F(-256, 3), F(-2288, 9), F(-1100, 9), F(968, 3), F(3179, 9), F(-847, 9), F(-638, 3), 110, F(-55, 3), 1],
]


@pytest.fixture(scope="session")
def paper_pk():
    return [Poly(c) for c in PAPER_PK]


@pytest.fixture(scope="session")
def table():
    return build_stirling_table(60)


@pytest.fixture(scope="session")
def cache():
    return BernoulliCache()


@pytest.fixture(scope="session")
def oracle(table, cache):
    return build_pk_sequence(20, "interp", table=table, cache=cache)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = dict(report.user_properties).get("criterion")
    if crit is not None:
        n, text = crit
        prev = _criteria.get(n, (text, True))
        _criteria[n] = (text, prev[1] and report.passed)


@pytest.fixture(autouse=True)
def _record_criterion(request, record_property):
    mark = request.node.get_closest_marker("criterion")
    if mark is not None:
        record_property("criterion", tuple(mark.args))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        text, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
