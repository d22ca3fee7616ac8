"""Acceptance criteria are tagged ``@pytest.mark.criterion(n, title)``; their
outcomes are printed as one line each at the end of the run."""

import pytest

_RESULTS: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    failed = report.failed or (report.when == "call" and report.skipped)
    prev = _RESULTS.get(number)
    elapsed = (prev[2] if prev else 0.0) + (report.duration if report.when == "call" else 0.0)
    if failed:
        _RESULTS[number] = (title, "FAIL", elapsed)
    elif report.when == "call" and (prev is None or prev[1] != "FAIL"):
        _RESULTS[number] = (title, "PASS", elapsed)
    elif prev is not None:
        _RESULTS[number] = (title, prev[1], elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, status, elapsed = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {status}  ({elapsed:.2f} s)  {title}")
