import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_criterion_"):
        CRITERIA[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA, key=lambda s: int(s.split("_")[2])):
        num = int(name.split("_")[2])
        label = " ".join(name.split("_")[3:])
        status = "PASS" if CRITERIA[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2} {status}  {label}")
