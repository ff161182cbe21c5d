import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title, limit = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        elapsed = dict(item.user_properties).get("elapsed")
        _RESULTS[number] = (title, report.passed, elapsed, limit)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, passed, elapsed, limit = _RESULTS[number]
        timing = f"{elapsed:.2f}s" if elapsed is not None else "n/a"
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  [{timing} / limit {limit}s]")
