from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

_acceptance: dict[int, dict] = {}


@pytest.fixture
def golden():
    return GOLDEN


def pytest_runtest_logreport(report):
    info = getattr(report, "_acceptance_info", None)
    if info is None:
        return
    number, title = info
    entry = _acceptance.setdefault(number, {"title": title, "ok": True})
    if report.failed:
        entry["ok"] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        report._acceptance_info = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        entry = _acceptance[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {entry['title']}")
