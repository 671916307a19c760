from __future__ import annotations

import re
from collections import OrderedDict

import numpy as np
import pytest

import helpers

_CRITERION = re.compile(r"test_criterion_(\d+)_")
_outcomes: OrderedDict[int, list[tuple[str, str]]] = OrderedDict()


@pytest.fixture
def example_1():
    return helpers.example_1()


@pytest.fixture
def example_2():
    return helpers.example_2()


@pytest.fixture
def relaxation():
    return helpers.relaxation()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if match is None:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        _outcomes.setdefault(int(match.group(1)), []).append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        results = _outcomes[number]
        ok = all(outcome == "passed" for _, outcome in results)
        failed = [name for name, outcome in results if outcome != "passed"]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}"
        if failed:
            line += f" ({', '.join(failed)})"
        terminalreporter.write_line(line)
