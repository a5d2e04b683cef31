import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parents[1]
GALLERY = ROOT / "gallery"

_results: dict[int, tuple[str, str]] = {}


@pytest.fixture
def gallery():
    return GALLERY


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if not marker:
        return
    number, text = marker
    prev = _results.get(number, ("PASS", text))[0]
    status = "PASS" if report.passed and prev == "PASS" else "FAIL"
    _results[number] = (status, text)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", (m.args[0], m.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        status, text = _results[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")
