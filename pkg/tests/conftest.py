import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion with a time limit in seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title, limit = marker.args
    elapsed = getattr(item, "criterion_elapsed", report.duration)
    _results.setdefault(number, []).append((title, limit, report.passed, elapsed))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        runs = _results[number]
        title, limit = runs[0][0], runs[0][1]
        ok = all(r[2] for r in runs)
        worst = max(r[3] for r in runs)
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({worst:.2f}s, limit {limit}s)"
        )
