"""Shared fixtures and the per-criterion acceptance summary."""

from __future__ import annotations

import sys
from collections import OrderedDict
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_outcomes: "OrderedDict[int, list]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number = getattr(report, "criterion", None)
    if number is not None:
        _outcomes.setdefault(number, []).append((report.nodeid, report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    try:
        from test_acceptance import CRITERIA, NOT_TESTABLE
    except ImportError:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number, title in CRITERIA.items():
        results = _outcomes.get(number)
        if number in NOT_TESTABLE:
            tr.write_line(f"criterion {number:2d}  NOTE  {title}")
        elif not results:
            tr.write_line(f"criterion {number:2d}  SKIP  {title} (not run)")
        else:
            failed = [nodeid for nodeid, ok in results if not ok]
            status = "PASS" if not failed else "FAIL"
            detail = f"{len(results) - len(failed)}/{len(results)} checks"
            tr.write_line(f"criterion {number:2d}  {status}  {title} [{detail}]")
