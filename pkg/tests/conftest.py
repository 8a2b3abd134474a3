import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {
    1: "counterexample reproduction at n = 4",
    2: "reduced chain product at n = 4",
    3: "corrected lemmas sweep, n = 2..10",
    4: "original claim boundary",
    5: "Koszul sign rule, exhaustive",
    6: "divisibility vs brute-force span membership",
    7: "ideal chain inclusions",
    8: "certificate integrity",
    9: "parser round trip",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes.setdefault(marker.args[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
