"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

import re

_results: dict[int, tuple[str, bool]] = {}
_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or (report.when != "call" and report.passed):
        return
    num, name = int(m.group(1)), m.group(2).replace("_", " ")
    ok = report.passed and _results.get(num, (name, True))[1]
    _results[num] = (name, ok)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        name, ok = _results[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {name}")
