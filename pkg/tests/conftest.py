"""Collects the outcome of every ``acceptance(n, title)`` test and reports one line each."""

import pytest

_results: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or not marker.args:
        return
    n, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        status = "PASS" if rep.passed else "FAIL"
        _results[n] = (status, title, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status, title, dur = _results[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}  ({dur:.2f}s)")
    passed = sum(1 for s, _, _ in _results.values() if s == "PASS")
    terminalreporter.write_line(f"{passed}/{len(_results)} criteria pass")
