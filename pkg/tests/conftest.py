"""Collects acceptance-criterion outcomes and prints one PASS/FAIL line per criterion."""
import pytest

_criteria: dict[int, dict] = {}
_node_criterion: dict[str, int] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is None:
            continue
        number, title = marker.args
        _node_criterion[item.nodeid] = number
        entry = _criteria.setdefault(number, {"title": title, "tests": 0, "failed": 0, "passed": 0})
        entry["tests"] += 1


def pytest_runtest_logreport(report):
    number = _node_criterion.get(report.nodeid)
    if number is None:
        return
    entry = _criteria[number]
    if report.failed:
        entry["failed"] += 1
    elif report.when == "call" and report.passed:
        entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        ok = entry["failed"] == 0 and entry["passed"] == entry["tests"]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:2d}: {status}  {entry['title']} ({entry['passed']}/{entry['tests']} checks)")
