import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[str, tuple[int, str]] = {}
_RESULTS: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _CRITERIA[item.nodeid] = (m.args[0], m.args[1])


def pytest_runtest_logreport(report):
    if report.nodeid not in _CRITERIA:
        return
    num = _CRITERIA[report.nodeid][0]
    if report.when == "call" or report.outcome == "failed":
        if hasattr(report, "wasxfail"):
            status = "xfail"
        else:
            status = report.outcome
        _RESULTS.setdefault(num, []).append((report.nodeid.split("::")[-1], status))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    titles = {}
    for num, title in _CRITERIA.values():
        titles.setdefault(num, title)
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(titles):
        runs = _RESULTS.get(num)
        if not runs:
            tr.write_line(f"criterion {num:2d}  NOT RUN  {titles[num]}")
            continue
        bad = [name for name, status in runs if status != "passed"]
        verdict = "FAIL" if bad else "PASS"
        note = f"  (red: {', '.join(bad)})" if bad else ""
        tr.write_line(f"criterion {num:2d}  {verdict}  {titles[num]}{note}")
