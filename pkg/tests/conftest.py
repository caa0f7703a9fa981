from __future__ import annotations

import re

CRITERION = re.compile(r"test_criterion_(\d+)")
_results: dict = {}


def pytest_runtest_logreport(report):
    m = CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        ok = report.outcome == "passed" and not hasattr(report, "wasxfail")
        n = int(m.group(1))
        _results.setdefault(n, []).append((report.nodeid.split("::")[-1], ok, getattr(report, "wasxfail", "")))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        tests = _results[n]
        ok = all(t[1] for t in tests)
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}"
        failed = [t for t in tests if not t[1]]
        if failed:
            line += "  (" + "; ".join(f"{name}{': ' + why if why else ''}" for name, _, why in failed) + ")"
        terminalreporter.write_line(line)
