import sys
from fractions import Fraction
from pathlib import Path

import pytest

from minkmat import RATIONALS, SubspaceTuple, gf

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"

# generator rows per entry, shared with the oracle
LINES_IN_PLANE = [[(1, 0)], [(1, 0)], [(1, 0), (0, 1)]]
LINES_IN_SPACE = [[(1, 0, 0)], [(1, 0, 0)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
LINE_PLANE_SPACE = [[(1, 0, 0)], [(0, 1, 0), (0, 0, 1)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
GF2_LINES = [[(1, 0)], [(0, 1)], [(1, 1)]]
FLAG3 = [[(1, 0, 0)], [(1, 0, 0), (0, 1, 0)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]


def make(gens, field=RATIONALS, dim=None):
    d = dim if dim is not None else len(gens[0][0])
    return SubspaceTuple.from_generators(field, d, gens)


@pytest.fixture
def lines_in_plane():
    return make(LINES_IN_PLANE)


@pytest.fixture
def lines_in_space():
    return make(LINES_IN_SPACE)


@pytest.fixture
def line_plane_space():
    return make(LINE_PLANE_SPACE)


@pytest.fixture
def gf2_lines():
    return make(GF2_LINES, gf(2))


@pytest.fixture
def flag3():
    return make(FLAG3)


@pytest.fixture
def data_dir():
    return DATA


# -- acceptance summary: one line per criterion ------------------------------------

_ACCEPTANCE: dict = {}


def _criterion(nodeid):
    name = nodeid.split("::")[-1]
    return int(name[len("test_criterion_"):].split("[")[0])


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and (report.when == "call" or report.failed):
        num = _criterion(report.nodeid)
        if report.failed or num not in _ACCEPTANCE:
            _ACCEPTANCE[num] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {num}: {_ACCEPTANCE[num]}  {TITLES[num]}")
