import json
from pathlib import Path

import pytest

from rcforms import tables
from rcforms.newforms import read_newform

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def f1():
    return tables.load_fixture_polynomial("f1.txt")


@pytest.fixture(scope="session")
def f2():
    return tables.load_fixture_polynomial("f2.txt")


@pytest.fixture(scope="session")
def g1():
    return read_newform(tables.fixture_path("g1.json"))


@pytest.fixture(scope="session")
def h1():
    return read_newform(tables.fixture_path("h1.json"))


@pytest.fixture(scope="session")
def partition_table_expected():
    return json.loads((DATA / "frobenius_table_l11.json").read_text())


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
